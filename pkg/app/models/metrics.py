# app/models/metrics.py
from typing import Iterable

from pydantic import BaseModel, Field


def _ratio(num: int, den: int) -> float:
    return num / den if den else 0.0


class Metrics(BaseModel):
    """Pairwise-order confusion tally with precision, recall and F1."""
    tp: int = Field(default=0, ge=0)
    fp: int = Field(default=0, ge=0)
    fn: int = Field(default=0, ge=0)
    tn: int = Field(default=0, ge=0)
    precision: float = Field(default=0.0, ge=0.0, le=1.0)
    recall: float = Field(default=0.0, ge=0.0, le=1.0)
    f1: float = Field(default=0.0, ge=0.0, le=1.0)

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int, tn: int = 0) -> "Metrics":
        precision = _ratio(tp, tp + fp)
        recall = _ratio(tp, tp + fn)
        f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
        return cls(tp=tp, fp=fp, fn=fn, tn=tn, precision=precision, recall=recall, f1=f1)

    @classmethod
    def from_predictions(cls, predictions: Iterable[bool], golds: Iterable[bool]) -> "Metrics":
        tp = fp = fn = tn = 0
        for pred, gold in zip(predictions, golds, strict=True):
            if pred and gold:
                tp += 1
            elif pred:
                fp += 1
            elif gold:
                fn += 1
            else:
                tn += 1
        return cls.from_counts(tp, fp, fn, tn)

    def render(self) -> str:
        return (
            f"precision={self.precision:.4f} recall={self.recall:.4f} f1={self.f1:.4f} "
            f"tp={self.tp} fp={self.fp} fn={self.fn} tn={self.tn}"
        )
