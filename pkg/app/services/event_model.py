"""Compositional event representation and linear ranking score.

    h = sigmoid(R c(pred) + sum_k T c(arg_k) + b_h)
    x = sigmoid(A h + b_x)
    s = w . x
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import expit

from app.core.config import settings
from app.core.exceptions import DimensionMismatchException
from app.models.events import Event, EventSequence, Mode, VERB_ONLY
from app.models.params import EmbeddingTable, ModelParams
from app.models.hyperparams import Dims

logger = logging.getLogger(__name__)


def sigmoid(z: float) -> float:
    """Logistic function; saturates instead of overflowing."""
    return float(expit(z))


def lookup_lemma(table: EmbeddingTable, lemma: str) -> np.ndarray:
    row = table.row(lemma)
    return table.unk if row < 0 else table.vectors[row]


@dataclass
class EventActivation:
    """Forward-pass record of one event, kept for backpropagation."""
    pred_row: int
    arg_rows: Tuple[int, ...]
    c_pred: np.ndarray
    c_args: np.ndarray  # sum of argument embeddings
    h: np.ndarray
    x: np.ndarray
    score: float


def _argument_lemmas(event: Event, mode: Mode) -> Tuple[str, ...]:
    return () if mode == VERB_ONLY else event.args


def forward_event(event: Event, params: ModelParams, mode: Mode = "full") -> EventActivation:
    table = params.table
    pred_row = table.row(event.predicate)
    arg_rows = tuple(table.row(a) for a in _argument_lemmas(event, mode))

    c_pred = lookup_lemma(table, event.predicate)
    c_args = np.zeros(table.dim)
    for row in arg_rows:
        # duplicates contribute once per occurrence
        c_args = c_args + (table.unk if row < 0 else table.vectors[row])

    h = expit(params.R @ c_pred + params.T @ c_args + params.b_h)
    x = expit(params.A @ h + params.b_x)
    score = float(params.w @ x)
    return EventActivation(pred_row, arg_rows, c_pred, c_args, h, x, score)


def embed_event(event: Event, params: ModelParams, mode: Mode = "full") -> np.ndarray:
    return forward_event(event, params, mode).x


def score_event(event: Event, params: ModelParams, mode: Mode = "full") -> float:
    return forward_event(event, params, mode).score


def score_events(events: Iterable[Event], params: ModelParams, mode: Mode = "full") -> np.ndarray:
    return np.array([score_event(ev, params, mode) for ev in events], dtype=np.float64)


def order_events(
    events: Sequence[Event], params: ModelParams, mode: Mode = "full"
) -> List[Tuple[float, Event]]:
    """Events with their scores, highest score first; ties keep input order."""
    scores = score_events(events, params, mode)
    order = sorted(range(len(events)), key=lambda i: -scores[i])
    return [(float(scores[i]), events[i]) for i in order]


def corpus_vocabulary(sequences: Iterable[EventSequence]) -> List[str]:
    """Sorted set of every predicate and argument lemma in the sequences."""
    vocab = {lemma for seq in sequences for event in seq.events for lemma in event.lemmas}
    return sorted(vocab)


def init_params(
    dims: Dims,
    seed: int,
    pretrained: Optional[EmbeddingTable] = None,
    vocab: Iterable[str] = (),
) -> ModelParams:
    """Seeded initialisation.

    Embeddings come from `pretrained` where available and uniform in
    [-0.1, 0.1] otherwise; unk is the mean of the initialised rows. R, T and A
    are uniform in +-1/sqrt(fan_in); biases and w start at zero.
    """
    d, h, e = dims
    if min(dims) < 1:
        raise DimensionMismatchException(f"dimensions must be positive, got {dims}")
    if pretrained is not None and pretrained.dim != d:
        raise DimensionMismatchException(
            f"pretrained embeddings have dimension {pretrained.dim}, model expects {d}",
            {"pretrained_dim": pretrained.dim, "d": d},
        )

    lemmas = sorted({lemma.lower() for lemma in vocab})
    rng = np.random.default_rng(seed)
    bound = settings.EMBED_INIT_RANGE

    vectors = rng.uniform(-bound, bound, size=(len(lemmas), d))
    hits = 0
    if pretrained is not None:
        for i, lemma in enumerate(lemmas):
            row = pretrained.row(lemma)
            if row >= 0:
                vectors[i] = pretrained.vectors[row]
                hits += 1
        logger.info(f"Pretrained coverage: {hits}/{len(lemmas)} lemmas")
    unk = vectors.mean(axis=0) if len(lemmas) else np.zeros(d)

    r_bound, a_bound = 1.0 / math.sqrt(d), 1.0 / math.sqrt(h)
    R = rng.uniform(-r_bound, r_bound, size=(h, d))
    T = rng.uniform(-r_bound, r_bound, size=(h, d))
    A = rng.uniform(-a_bound, a_bound, size=(e, h))

    return ModelParams(
        table=EmbeddingTable(vocab=tuple(lemmas), vectors=vectors, unk=unk),
        R=R,
        T=T,
        A=A,
        b_h=np.zeros(h),
        b_x=np.zeros(e),
        w=np.zeros(e),
    )
