from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np


def _violation_mask(t: np.ndarray, gamma: float) -> np.ndarray:
    # mask[i, j] for i < j: earlier event i does not beat later event j by gamma
    gaps = t[:, None] - t[None, :]
    return np.triu(gaps < gamma, k=1)


def ranking_violations(t: Sequence[float], gamma: float) -> Tuple[int, List[Tuple[int, int]]]:
    """Margin violations among gold-ordered pairs (0-based, i < j, each pair once)."""
    scores = np.asarray(t, dtype=np.float64)
    pairs = [(int(i), int(j)) for i, j in np.argwhere(_violation_mask(scores, gamma))]
    return len(pairs), pairs


def sequence_loss(t: Sequence[float], gamma: float) -> float:
    """Hinge surrogate: sum over violated pairs of gamma - (t[i] - t[j])."""
    scores = np.asarray(t, dtype=np.float64)
    mask = _violation_mask(scores, gamma)
    gaps = scores[:, None] - scores[None, :]
    return float(np.sum((gamma - gaps)[mask]))


def score_coefficients(t: Sequence[float], gamma: float) -> np.ndarray:
    """dLoss/dt: -1 per violated pair where the event is earlier, +1 where later."""
    scores = np.asarray(t, dtype=np.float64)
    mask = _violation_mask(scores, gamma).astype(np.float64)
    return mask.sum(axis=0) - mask.sum(axis=1)
