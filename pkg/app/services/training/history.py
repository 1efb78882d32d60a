# app/services/training/history.py
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List


@dataclass
class EpochRecord:
    """Totals over one pass through the corpus."""
    epoch: int
    violations: int = 0
    loss: float = 0.0
    sequences: int = 0

    def __add__(self, other: "EpochRecord") -> "EpochRecord":
        return EpochRecord(
            epoch=self.epoch,
            violations=self.violations + other.violations,
            loss=self.loss + other.loss,
            sequences=self.sequences + other.sequences,
        )


@dataclass
class TrainingHistory:
    """Per-epoch violation counts and losses of a training run."""
    epochs: List[EpochRecord] = field(default_factory=list)
    started: datetime = field(default_factory=datetime.now)

    def record(self, record: EpochRecord) -> EpochRecord:
        self.epochs.append(record)
        return record

    @property
    def violations(self) -> List[int]:
        return [r.violations for r in self.epochs]

    @property
    def losses(self) -> List[float]:
        return [r.loss for r in self.epochs]

    def first_clean_epoch(self) -> int | None:
        """First epoch with zero violations, if any."""
        for r in self.epochs:
            if r.violations == 0:
                return r.epoch
        return None

    def get_summary(self) -> Dict[str, Any]:
        if not self.epochs:
            return {"epochs": 0, "final_violations": None, "final_loss": None}
        last = self.epochs[-1]
        return {
            "epochs": len(self.epochs),
            "final_violations": last.violations,
            "final_loss": round(last.loss, 6),
            "first_clean_epoch": self.first_clean_epoch(),
            "duration_s": round((datetime.now() - self.started).total_seconds(), 3),
        }

    def same_as(self, other: "TrainingHistory") -> bool:
        # timing excluded
        return [(r.epoch, r.violations, r.loss, r.sequences) for r in self.epochs] == [
            (r.epoch, r.violations, r.loss, r.sequences) for r in other.epochs
        ]
