from __future__ import annotations

import logging
from typing import Dict, List, Sequence

from app.core.exceptions import EmptyInputException
from app.models.events import Event, LabeledPair, Mode
from app.models.metrics import Metrics
from app.models.params import ModelParams
from app.services.event_model import score_event

logger = logging.getLogger(__name__)


def predict_pair(e1: Event, e2: Event, params: ModelParams, mode: Mode = "full") -> bool:
    """e1 precedes e2 iff its score is strictly higher; exact ties are negative."""
    return score_event(e1, params, mode) > score_event(e2, params, mode)


def _predict_all(pairs: Sequence[LabeledPair], params: ModelParams, mode: Mode) -> List[bool]:
    cache: Dict[Event, float] = {}

    def score(ev: Event) -> float:
        if ev not in cache:
            cache[ev] = score_event(ev, params, mode)
        return cache[ev]

    return [score(p.e1) > score(p.e2) for p in pairs]


def evaluate(pairs: Sequence[LabeledPair], params: ModelParams, mode: Mode = "full") -> Metrics:
    if not pairs:
        raise EmptyInputException("no evaluation pairs")
    predictions = _predict_all(pairs, params, mode)
    metrics = Metrics.from_predictions(predictions, (p.gold for p in pairs))
    logger.info(f"Evaluated {len(pairs)} pairs (mode={mode}): {metrics.render()}")
    return metrics


def group_by_scenario(pairs: Sequence[LabeledPair]) -> Dict[str, List[LabeledPair]]:
    grouped: Dict[str, List[LabeledPair]] = {}
    for pair in pairs:
        grouped.setdefault(pair.scenario, []).append(pair)
    return grouped


def evaluate_by_scenario(
    pairs: Sequence[LabeledPair], params: ModelParams, mode: Mode = "full"
) -> Dict[str, Metrics]:
    """Metrics per scenario, scenarios in order of first appearance."""
    if not pairs:
        raise EmptyInputException("no evaluation pairs")
    return {scenario: evaluate(group, params, mode) for scenario, group in group_by_scenario(pairs).items()}
