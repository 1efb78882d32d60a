"""Verb-frequency baseline (BL).

(e1, e2) is predicted in order when the verb of e1 appears before the verb of
e2 more often than the reverse in the training ESDs (any distance apart). Ties
and identical verbs are decided by a seeded fair coin; the coin for pair k is
drawn from default_rng([seed, k]) so predictions do not depend on scheduling.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from app.core.exceptions import EmptyInputException
from app.models.events import Corpus, Event, EventSequence, LabeledPair
from app.models.metrics import Metrics

logger = logging.getLogger(__name__)


@dataclass
class BLModel:
    counts: Counter = field(default_factory=Counter)  # (v1, v2) -> times v1 before v2
    seed: int = 0
    _calls: Iterator[int] = field(default_factory=itertools.count, repr=False)

    def count(self, v1: str, v2: str) -> int:
        return self.counts.get((v1, v2), 0)


def train_bl(corpus: Union[Corpus, Sequence[EventSequence]], seed: int = 0) -> BLModel:
    sequences = corpus.sequences() if isinstance(corpus, Corpus) else list(corpus)
    counts: Counter = Counter()
    for seq in sequences:
        verbs = [ev.predicate for ev in seq.events]
        for i, j in itertools.combinations(range(len(verbs)), 2):
            counts[(verbs[i], verbs[j])] += 1
    logger.info(f"BL trained on {len(sequences)} ESDs, {len(counts)} ordered verb pairs")
    return BLModel(counts=counts, seed=seed)


def coin(seed: int, pair_index: int) -> bool:
    return bool(np.random.default_rng([seed, pair_index]).random() < 0.5)


def predict_bl(bl: BLModel, e1: Event, e2: Event, pair_index: Optional[int] = None) -> bool:
    v1, v2 = e1.predicate, e2.predicate
    if pair_index is None:
        pair_index = next(bl._calls)
    if v1 != v2:
        forward, backward = bl.count(v1, v2), bl.count(v2, v1)
        if forward != backward:
            return forward > backward
    return coin(bl.seed, pair_index)


def predict_bl_all(bl: BLModel, pairs: Sequence[LabeledPair]) -> List[bool]:
    return [predict_bl(bl, p.e1, p.e2, pair_index=k) for k, p in enumerate(pairs)]


def evaluate_bl(pairs: Sequence[LabeledPair], bl: BLModel) -> Metrics:
    if not pairs:
        raise EmptyInputException("no evaluation pairs")
    return Metrics.from_predictions(predict_bl_all(bl, pairs), (p.gold for p in pairs))


def evaluate_bl_by_scenario(pairs: Sequence[LabeledPair], bl: BLModel) -> Dict[str, Metrics]:
    """Per-scenario BL metrics; pair indices stay global so coins match evaluate_bl."""
    if not pairs:
        raise EmptyInputException("no evaluation pairs")
    predictions = predict_bl_all(bl, pairs)
    tallies: Dict[str, Tuple[List[bool], List[bool]]] = {}
    for pred, pair in zip(predictions, pairs):
        preds, golds = tallies.setdefault(pair.scenario, ([], []))
        preds.append(pred)
        golds.append(pair.gold)
    return {scenario: Metrics.from_predictions(p, g) for scenario, (p, g) in tallies.items()}
