# app/models/params.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from app.core.exceptions import DimensionMismatchException, ValidationException

# Order of parameter blocks everywhere (updates, gradient checks, serialization)
PARAM_BLOCKS: Tuple[str, ...] = ("embeddings", "unk", "R", "T", "A", "b_h", "b_x", "w")


def _frozen(values: object) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class EmbeddingTable:
    """Lemma -> vector map (the embedding function C) with a dedicated unk vector."""
    vocab: Tuple[str, ...]
    vectors: np.ndarray
    unk: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "vocab", tuple(self.vocab))
        object.__setattr__(self, "vectors", _frozen(self.vectors))
        object.__setattr__(self, "unk", _frozen(self.unk))

        if self.vectors.ndim != 2:
            raise DimensionMismatchException(
                f"embedding matrix must be 2-D, got shape {self.vectors.shape}"
            )
        if self.vectors.shape[0] != len(self.vocab):
            raise DimensionMismatchException(
                f"{len(self.vocab)} lemmas but {self.vectors.shape[0]} vectors"
            )
        if self.vectors.shape[1] < 1:
            raise DimensionMismatchException("embedding dimension must be positive")
        if self.unk.shape != (self.dim,):
            raise DimensionMismatchException(
                f"unk vector has shape {self.unk.shape}, expected ({self.dim},)"
            )
        if len(set(self.vocab)) != len(self.vocab):
            raise ValidationException("duplicate lemma in embedding vocabulary")

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    @cached_property
    def index(self) -> Dict[str, int]:
        return {lemma: i for i, lemma in enumerate(self.vocab)}

    def __contains__(self, lemma: object) -> bool:
        return isinstance(lemma, str) and lemma.lower() in self.index

    def __len__(self) -> int:
        return len(self.vocab)

    def row(self, lemma: str) -> int:
        """Row index of a lemma, or -1 for the unk vector."""
        return self.index.get(lemma.lower(), -1)

    @classmethod
    def from_mapping(cls, entries: Mapping[str, Sequence[float]], dim: int) -> "EmbeddingTable":
        """Build a table whose unk is the mean of the given vectors (zeros if none)."""
        vocab = tuple(entries.keys())
        vectors = np.array([entries[lemma] for lemma in vocab], dtype=np.float64).reshape(len(vocab), dim)
        unk = vectors.mean(axis=0) if len(vocab) else np.zeros(dim)
        return cls(vocab=vocab, vectors=vectors, unk=unk)


@dataclass(frozen=True, eq=False)
class ModelParams:
    """Everything learned: C, R, T, A, both biases and the ranking vector w."""
    table: EmbeddingTable
    R: np.ndarray
    T: np.ndarray
    A: np.ndarray
    b_h: np.ndarray
    b_x: np.ndarray
    w: np.ndarray

    def __post_init__(self) -> None:
        for name in ("R", "T", "A", "b_h", "b_x", "w"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

        d, h, e = self.dims
        expected = {
            "R": (h, d),
            "T": (h, d),
            "A": (e, h),
            "b_h": (h,),
            "b_x": (e,),
            "w": (e,),
        }
        for name, shape in expected.items():
            actual = getattr(self, name).shape
            if actual != shape:
                raise DimensionMismatchException(
                    f"block {name} has shape {actual}, expected {shape}",
                    {"block": name, "expected": shape, "actual": actual},
                )
        for name, arr in self.blocks().items():
            if not np.all(np.isfinite(arr)):
                raise ValidationException(f"block {name} contains non-finite values")

    @property
    def dims(self) -> Tuple[int, int, int]:
        if self.R.ndim != 2 or self.A.ndim != 2:
            raise DimensionMismatchException("R and A must be matrices")
        return self.table.dim, int(self.R.shape[0]), int(self.A.shape[0])

    @property
    def vocab(self) -> Tuple[str, ...]:
        return self.table.vocab

    def blocks(self) -> Dict[str, np.ndarray]:
        return {
            "embeddings": self.table.vectors,
            "unk": self.table.unk,
            "R": self.R,
            "T": self.T,
            "A": self.A,
            "b_h": self.b_h,
            "b_x": self.b_x,
            "w": self.w,
        }

    def with_blocks(self, **blocks: np.ndarray) -> "ModelParams":
        """Copy with some blocks replaced; the vocabulary is kept."""
        current = {**self.blocks(), **blocks}
        table = EmbeddingTable(vocab=self.vocab, vectors=current["embeddings"], unk=current["unk"])
        # same vocabulary, so the lemma index carries over
        table.__dict__["index"] = self.table.index
        return ModelParams(
            table=table,
            R=current["R"],
            T=current["T"],
            A=current["A"],
            b_h=current["b_h"],
            b_x=current["b_x"],
            w=current["w"],
        )

    def same_as(self, other: "ModelParams") -> bool:
        """Bitwise equality of vocabulary and every block."""
        if self.vocab != other.vocab:
            return False
        mine, theirs = self.blocks(), other.blocks()
        return all(
            mine[name].shape == theirs[name].shape
            and mine[name].tobytes() == theirs[name].tobytes()
            for name in PARAM_BLOCKS
        )


@dataclass
class Gradients:
    """Gradient blocks shaped like the ModelParams blocks they update."""
    embeddings: np.ndarray
    unk: np.ndarray
    R: np.ndarray
    T: np.ndarray
    A: np.ndarray
    b_h: np.ndarray
    b_x: np.ndarray
    w: np.ndarray

    @classmethod
    def zeros_like(cls, params: ModelParams) -> "Gradients":
        return cls(**{name: np.zeros_like(arr) for name, arr in params.blocks().items()})

    def blocks(self) -> Dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in PARAM_BLOCKS}

    def zero_embeddings(self) -> None:
        self.embeddings[...] = 0.0
        self.unk[...] = 0.0

    def max_abs(self, names: Optional[Sequence[str]] = None) -> float:
        selected = names or PARAM_BLOCKS
        return max((float(np.max(np.abs(getattr(self, n)), initial=0.0)) for n in selected), default=0.0)
