"""Plain-text model files.

    EEMODEL v1
    dims d h e
    vocab N
    <lemma> v1 ... vd        (N lines, vocabulary order)
    unk v1 ... vd
    R / T / A                label line, then one line per matrix row
    b_h / b_x / w            label line, then the vector on one line

Reals are written with repr(), the shortest string that reads back to the
same 64-bit value.
"""
from __future__ import annotations

import logging
import math
from typing import Iterator, List, Tuple

import numpy as np

from app.core.config import settings
from app.core.exceptions import DimensionMismatchException, ModelFormatException, ValidationException
from app.models.params import EmbeddingTable, ModelParams
from app.utils.corpus_io import TextSource, iter_lines

logger = logging.getLogger(__name__)

MATRIX_BLOCKS = ("R", "T", "A")
VECTOR_BLOCKS = ("b_h", "b_x", "w")


def _fmt(values: np.ndarray) -> str:
    return " ".join(repr(float(v)) for v in values)


def write_model(params: ModelParams) -> str:
    d, h, e = params.dims
    lines = [settings.MODEL_MAGIC, f"dims {d} {h} {e}", f"vocab {len(params.vocab)}"]
    for lemma, vector in zip(params.vocab, params.table.vectors):
        lines.append(f"{lemma} {_fmt(vector)}")
    lines.append(f"unk {_fmt(params.table.unk)}")
    for name in MATRIX_BLOCKS:
        lines.append(name)
        lines.extend(_fmt(row) for row in getattr(params, name))
    for name in VECTOR_BLOCKS:
        lines.append(name)
        lines.append(_fmt(getattr(params, name)))
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, text: TextSource, source: str) -> None:
        self._lines: Iterator[Tuple[int, str]] = iter_lines(text)
        self.source = source
        self.lineno = 0

    def error(self, message: str) -> ModelFormatException:
        return ModelFormatException(message, self.source, self.lineno or None)

    def next(self, what: str) -> str:
        try:
            self.lineno, line = next(self._lines)
        except StopIteration:
            raise self.error(f"unexpected end of file, expected {what}") from None
        return line

    def reals(self, fields: List[str], expected: int, what: str) -> List[float]:
        if len(fields) != expected:
            raise self.error(f"{what}: expected {expected} values, got {len(fields)}")
        try:
            values = [float(v) for v in fields]
        except ValueError:
            raise self.error(f"{what}: non-numeric field") from None
        if not all(math.isfinite(v) for v in values):
            raise self.error(f"{what}: non-finite value")
        return values

    def keyed_ints(self, key: str, count: int) -> List[int]:
        fields = self.next(f"'{key}' line").split()
        if len(fields) != count + 1 or fields[0] != key:
            raise self.error(f"expected '{key}' followed by {count} integers")
        try:
            values = [int(v) for v in fields[1:]]
        except ValueError:
            raise self.error(f"'{key}' values must be integers") from None
        if any(v < 0 for v in values):
            raise self.error(f"'{key}' values must be non-negative")
        return values

    def label(self, name: str) -> None:
        if self.next(f"block label {name}").strip() != name:
            raise self.error(f"expected block label {name!r}")

    def expect_end(self) -> None:
        for self.lineno, line in self._lines:
            if line.strip():
                raise self.error("trailing content after model")


def read_model(text: TextSource, source: str = "<input>") -> ModelParams:
    reader = _Reader(text, source)
    if reader.next("magic line").strip() != settings.MODEL_MAGIC:
        raise reader.error(f"bad magic line, expected {settings.MODEL_MAGIC!r}")

    d, h, e = reader.keyed_ints("dims", 3)
    if min(d, h, e) < 1:
        raise reader.error("dimensions must be positive")
    (n,) = reader.keyed_ints("vocab", 1)

    vocab: List[str] = []
    rows: List[List[float]] = []
    seen = set()
    for _ in range(n):
        fields = reader.next("vocabulary entry").split()
        if not fields:
            raise reader.error("empty vocabulary line")
        if fields[0] in seen:
            raise reader.error(f"duplicate vocabulary lemma {fields[0]!r}")
        seen.add(fields[0])
        vocab.append(fields[0])
        rows.append(reader.reals(fields[1:], d, f"vector of {fields[0]!r}"))
    vectors = np.array(rows, dtype=np.float64).reshape(n, d)

    fields = reader.next("unk vector").split()
    if not fields or fields[0] != "unk":
        raise reader.error("expected unk vector")
    unk = np.array(reader.reals(fields[1:], d, "unk"))

    shapes = {"R": (h, d), "T": (h, d), "A": (e, h), "b_h": h, "b_x": e, "w": e}
    blocks = {}
    for name in MATRIX_BLOCKS:
        rows, cols = shapes[name]
        reader.label(name)
        blocks[name] = np.array(
            [reader.reals(reader.next(f"row of {name}").split(), cols, name) for _ in range(rows)]
        ).reshape(rows, cols)
    for name in VECTOR_BLOCKS:
        reader.label(name)
        blocks[name] = np.array(reader.reals(reader.next(name).split(), shapes[name], name))

    reader.expect_end()

    try:
        table = EmbeddingTable(vocab=tuple(vocab), vectors=vectors, unk=unk)
        params = ModelParams(table=table, **blocks)
    except (DimensionMismatchException, ValidationException) as exc:
        raise ModelFormatException(exc.message, source) from exc

    logger.info(f"Loaded model from {source}: dims={params.dims}, vocab={len(vocab)}")
    return params
