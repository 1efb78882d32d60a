"""Text formats for ESD corpora, labeled evaluation pairs and event lists.

Corpus:  "#scenario <id>" header; one event per line, tab-separated lemmas
         (predicate first); a blank line ends an ESD.
Pairs:   scenario <TAB> event-1 <TAB> event-2 <TAB> 1|0, event tokens
         separated by single spaces.
"""
from __future__ import annotations

import io
import logging
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from pydantic import ValidationError

from app.core.exceptions import CorpusFormatException
from app.models.events import Corpus, Event, EventSequence, LabeledPair

logger = logging.getLogger(__name__)

TextSource = Union[str, Iterable[str]]
HEADER_PREFIX = "#scenario"


def iter_lines(text: TextSource) -> Iterator[Tuple[int, str]]:
    """(1-based line number, line without its newline)."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    for lineno, raw in enumerate(stream, start=1):
        yield lineno, raw.rstrip("\r\n")


def _make_event(tokens: Sequence[str], source: str, lineno: int) -> Event:
    if not tokens or any(tok == "" for tok in tokens):
        raise CorpusFormatException("empty token in event", source, lineno)
    try:
        return Event(predicate=tokens[0], args=tuple(tokens[1:]))
    except ValidationError as exc:
        raise CorpusFormatException(f"invalid event: {exc.errors()[0]['msg']}", source, lineno) from exc


def parse_event_line(line: str, source: str = "<input>", lineno: int = 1) -> Event:
    """One corpus-syntax event line (tab-separated lemmas)."""
    return _make_event(line.split("\t"), source, lineno)


def _parse_header(line: str, source: str, lineno: int) -> str:
    parts = line.split(maxsplit=1)
    if parts[0] != HEADER_PREFIX or len(parts) != 2 or not parts[1].strip():
        raise CorpusFormatException(f"malformed header {line!r}", source, lineno)
    scenario = parts[1].strip()
    if any(ch.isspace() for ch in scenario):
        raise CorpusFormatException(f"malformed header {line!r}: scenario id contains whitespace", source, lineno)
    return scenario


def parse_corpus(text: TextSource, source: str = "<input>") -> Corpus:
    scenarios: Dict[str, List[EventSequence]] = {}
    scenario: str | None = None
    pending: List[Event] = []

    def flush() -> None:
        if pending and scenario is not None:
            scenarios.setdefault(scenario, []).append(EventSequence(scenario=scenario, events=tuple(pending)))
        pending.clear()

    for lineno, line in iter_lines(text):
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            flush()
            scenario = _parse_header(line, source, lineno)
            scenarios.setdefault(scenario, [])
            continue
        if scenario is None:
            raise CorpusFormatException("event outside scenario", source, lineno)
        pending.append(parse_event_line(line, source, lineno))
    flush()

    corpus = Corpus(scenarios=scenarios)
    logger.info(f"Parsed {source}: {len(scenarios)} scenarios, {corpus.num_sequences} ESDs")
    return corpus


def parse_pairs(text: TextSource, source: str = "<input>") -> List[LabeledPair]:
    pairs: List[LabeledPair] = []
    for lineno, line in iter_lines(text):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise CorpusFormatException(f"expected 4 tab-separated fields, got {len(fields)}", source, lineno)
        scenario, first, second, label = fields
        if label not in ("0", "1"):
            raise CorpusFormatException(f"label must be 0 or 1, got {label!r}", source, lineno)
        if not scenario:
            raise CorpusFormatException("empty scenario id", source, lineno)
        pairs.append(
            LabeledPair(
                scenario=scenario,
                e1=_make_event(first.split(" "), source, lineno),
                e2=_make_event(second.split(" "), source, lineno),
                gold=label == "1",
            )
        )
    logger.info(f"Parsed {source}: {len(pairs)} labeled pairs")
    return pairs


def parse_event_list(text: TextSource, source: str = "<input>") -> List[Tuple[str, Event]]:
    """Event lines for ordering; blank lines and scenario headers are skipped."""
    events: List[Tuple[str, Event]] = []
    for lineno, line in iter_lines(text):
        if not line.strip() or line.startswith("#"):
            continue
        events.append((line, parse_event_line(line, source, lineno)))
    return events


def format_event(event: Event, sep: str = "\t") -> str:
    return sep.join(event.lemmas)


def serialize_corpus(corpus: Corpus) -> str:
    out: List[str] = []
    for scenario, sequences in corpus.scenarios.items():
        out.append(f"{HEADER_PREFIX} {scenario}\n")
        for seq in sequences:
            out.extend(format_event(ev) + "\n" for ev in seq.events)
            out.append("\n")
    return "".join(out)


def serialize_pairs(pairs: Iterable[LabeledPair]) -> str:
    return "".join(
        f"{p.scenario}\t{format_event(p.e1, ' ')}\t{format_event(p.e2, ' ')}\t{int(p.gold)}\n" for p in pairs
    )
