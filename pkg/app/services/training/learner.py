"""Online large-margin ranking with backpropagation into the event network.

One pass per epoch over the ESDs in corpus order; each ESD is scored, its
margin violations turned into a hinge loss, and every parameter block
(embeddings and w included) takes one regularised SGD step.
"""
from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from app.core.config import settings
from app.core.exceptions import DimensionMismatchException, EmptyInputException
from app.models.events import Corpus, EventSequence
from app.models.hyperparams import Hyperparams
from app.models.params import Gradients, ModelParams
from app.services.event_model import (
    EventActivation,
    corpus_vocabulary,
    forward_event,
    init_params,
    score_events,
)
from app.services.training.history import EpochRecord, TrainingHistory
from app.services.training.ranking_error import (
    ranking_violations,
    score_coefficients,
    sequence_loss,
)

logger = logging.getLogger(__name__)

EMBEDDING_BLOCKS = ("embeddings", "unk")


def _accumulate_row(grads: Gradients, row: int, delta: np.ndarray) -> None:
    if row < 0:
        grads.unk += delta
    else:
        grads.embeddings[row] += delta


def _backprop_event(act: EventActivation, coef: float, params: ModelParams, grads: Gradients) -> None:
    # s = w.x ; x = sig(A h + b_x) ; h = sig(R c_p + T sum c_a + b_h)
    grads.w += coef * act.x
    dz_x = coef * params.w * act.x * (1.0 - act.x)
    grads.A += np.outer(dz_x, act.h)
    grads.b_x += dz_x

    dz_h = (params.A.T @ dz_x) * act.h * (1.0 - act.h)
    grads.R += np.outer(dz_h, act.c_pred)
    grads.T += np.outer(dz_h, act.c_args)
    grads.b_h += dz_h

    _accumulate_row(grads, act.pred_row, params.R.T @ dz_h)
    if act.arg_rows:
        d_arg = params.T.T @ dz_h
        for row in act.arg_rows:
            _accumulate_row(grads, row, d_arg)


def _sequence_pass(
    seq: EventSequence, params: ModelParams, hyper: Hyperparams
) -> Tuple[np.ndarray, float, Gradients]:
    grads = Gradients.zeros_like(params)
    if len(seq) < 2:
        return np.zeros(len(seq)), 0.0, grads

    acts = [forward_event(ev, params, hyper.mode) for ev in seq.events]
    scores = np.array([a.score for a in acts])
    loss = sequence_loss(scores, hyper.gamma)
    if loss > 0.0:
        for act, coef in zip(acts, score_coefficients(scores, hyper.gamma)):
            if coef != 0.0:
                _backprop_event(act, float(coef), params, grads)
    if hyper.freeze_embeddings:
        grads.zero_embeddings()
    return scores, loss, grads


def sequence_gradients(
    seq: EventSequence, params: ModelParams, hyper: Hyperparams
) -> Tuple[float, Gradients]:
    """Hinge loss of one ESD and its exact gradient w.r.t. every parameter block."""
    _, loss, grads = _sequence_pass(seq, params, hyper)
    return loss, grads


def finite_difference_gradients(
    seq: EventSequence,
    params: ModelParams,
    hyper: Hyperparams,
    step: float = settings.FD_STEP,
) -> Gradients:
    """Central-difference estimate of the sequence loss gradient; test oracle only."""
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")

    def loss_of(candidate: ModelParams) -> float:
        return sequence_loss(score_events(seq.events, candidate, hyper.mode), hyper.gamma)

    estimate = Gradients.zeros_like(params)
    for name, theta in params.blocks().items():
        out = getattr(estimate, name)
        for idx in np.ndindex(theta.shape):
            plus = theta.copy()
            plus[idx] += step
            minus = theta.copy()
            minus[idx] -= step
            f_plus = loss_of(params.with_blocks(**{name: plus}))
            f_minus = loss_of(params.with_blocks(**{name: minus}))
            out[idx] = (f_plus - f_minus) / (2.0 * step)
    return estimate


def apply_update(
    params: ModelParams,
    grads: Gradients,
    eta: float,
    lam: float,
    update_embeddings: bool = True,
) -> ModelParams:
    """theta <- theta - eta * (g + lam * theta) on every block (weight decay = Gaussian prior)."""
    updated = {}
    for name, theta in params.blocks().items():
        if not update_embeddings and name in EMBEDDING_BLOCKS:
            continue
        g = getattr(grads, name)
        if g.shape != theta.shape:
            raise DimensionMismatchException(
                f"gradient block {name} has shape {g.shape}, parameter has {theta.shape}"
            )
        updated[name] = theta - eta * (g + lam * theta)
    return params.with_blocks(**updated)


def train(
    corpus: Union[Corpus, Sequence[EventSequence]],
    hyper: Hyperparams,
    init: Optional[ModelParams] = None,
) -> Tuple[ModelParams, TrainingHistory]:
    """Online training: epochs x ESDs, one update per ESD.

    Deterministic for a given seed and corpus order. With `hyper.shuffle` the
    ESD order is re-drawn every epoch from a generator seeded by `hyper.seed`.
    """
    sequences = corpus.sequences() if isinstance(corpus, Corpus) else list(corpus)
    if not sequences:
        raise EmptyInputException("cannot train on an empty corpus")

    if init is None:
        init = init_params(hyper.dims, hyper.seed, None, corpus_vocabulary(sequences))
    if init.dims != tuple(hyper.dims):
        raise DimensionMismatchException(
            f"initial parameters have dims {init.dims}, hyperparameters say {tuple(hyper.dims)}"
        )

    logger.info(
        f"Training on {len(sequences)} ESDs: epochs={hyper.epochs} gamma={hyper.gamma} "
        f"eta={hyper.eta} lambda={hyper.lam} mode={hyper.mode} dims={tuple(hyper.dims)}"
    )

    params = init
    history = TrainingHistory()
    rng = np.random.default_rng(hyper.seed)
    update_embeddings = not hyper.freeze_embeddings

    for epoch in range(1, hyper.epochs + 1):
        order: Iterable[int] = rng.permutation(len(sequences)) if hyper.shuffle else range(len(sequences))
        record = EpochRecord(epoch=epoch)
        for k in order:
            scores, loss, grads = _sequence_pass(sequences[k], params, hyper)
            count, _ = ranking_violations(scores, hyper.gamma)
            record = record + EpochRecord(epoch=epoch, violations=count, loss=loss, sequences=1)
            params = apply_update(params, grads, hyper.eta, hyper.lam, update_embeddings)
        history.record(record)

        logger.debug(f"epoch {epoch}: violations={record.violations} loss={record.loss:.6f}")
        if epoch % settings.LOG_EVERY_EPOCHS == 0 or epoch == hyper.epochs:
            logger.info(f"epoch {epoch}/{hyper.epochs}: violations={record.violations} loss={record.loss:.4f}")

    logger.info(f"Training finished: {history.get_summary()}")
    return params, history
