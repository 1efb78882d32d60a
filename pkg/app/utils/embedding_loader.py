import logging
import math
from typing import Dict, List

from app.core.exceptions import CorpusFormatException
from app.models.events import normalize_lemma
from app.models.params import EmbeddingTable
from app.utils.corpus_io import TextSource, iter_lines

logger = logging.getLogger(__name__)


def parse_embeddings(text: TextSource, source: str = "<input>") -> EmbeddingTable:
    """Load a word-vector text file ("lemma v1 ... vd" per line).

    - d is inferred from the first non-blank line and every later line must match it.
    - Lemmas are case-folded; a lemma appearing twice is an error.
    - unk is the componentwise mean of all vectors.
    """
    entries: Dict[str, List[float]] = {}
    dim = None

    for lineno, line in iter_lines(text):
        items = line.split()
        if not items:
            continue
        try:
            lemma = normalize_lemma(items[0])
        except ValueError as exc:
            raise CorpusFormatException(str(exc), source, lineno) from exc

        try:
            vector = [float(v) for v in items[1:]]
        except ValueError as exc:
            raise CorpusFormatException(f"non-numeric field for {lemma!r}", source, lineno) from exc
        if not all(math.isfinite(v) for v in vector):
            raise CorpusFormatException(f"non-finite value for {lemma!r}", source, lineno)

        if dim is None:
            if not vector:
                raise CorpusFormatException(f"no vector given for {lemma!r}", source, lineno)
            dim = len(vector)
        elif len(vector) != dim:
            raise CorpusFormatException(
                f"vector for {lemma!r} has {len(vector)} values, expected {dim}", source, lineno
            )
        if lemma in entries:
            raise CorpusFormatException(f"duplicate lemma {lemma!r}", source, lineno)
        entries[lemma] = vector

    if dim is None:
        raise CorpusFormatException("empty embeddings file, cannot infer dimension", source)

    logger.info(f"Read {len(entries)} vectors of dimension {dim} from {source}")
    return EmbeddingTable.from_mapping(entries, dim)


def write_embeddings(table: EmbeddingTable) -> str:
    """Inverse of parse_embeddings; the unk vector is derived, not written."""
    return "".join(
        lemma + " " + " ".join(repr(float(v)) for v in table.vectors[i]) + "\n"
        for i, lemma in enumerate(table.vocab)
    )
