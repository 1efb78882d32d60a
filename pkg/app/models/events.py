# app/models/events.py
from typing import Annotated, Dict, List, Literal, Tuple

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, model_validator

Mode = Literal["full", "verb_only"]
FULL: Mode = "full"
VERB_ONLY: Mode = "verb_only"


def normalize_lemma(text: str) -> str:
    """Case-fold a lemma and reject empty or whitespace-bearing tokens."""
    if not text:
        raise ValueError("lemma must be non-empty")
    if any(ch.isspace() for ch in text):
        raise ValueError(f"lemma contains whitespace: {text!r}")
    return text.lower()


Lemma = Annotated[str, AfterValidator(normalize_lemma)]


class Event(BaseModel):
    """Predicate lemma plus the head lemmas of its arguments, in input order."""
    model_config = ConfigDict(frozen=True)

    predicate: Lemma
    args: Tuple[Lemma, ...] = ()

    @property
    def lemmas(self) -> Tuple[str, ...]:
        return (self.predicate, *self.args)


class EventSequence(BaseModel):
    """One ESD: events listed in their gold temporal order."""
    model_config = ConfigDict(frozen=True)

    scenario: str = Field(min_length=1)
    events: Tuple[Event, ...] = Field(min_length=1)

    def __len__(self) -> int:
        return len(self.events)


class Corpus(BaseModel):
    scenarios: Dict[str, List[EventSequence]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_keys(self) -> "Corpus":
        for key, sequences in self.scenarios.items():
            for seq in sequences:
                if seq.scenario != key:
                    raise ValueError(f"sequence of scenario {seq.scenario!r} filed under {key!r}")
        return self

    def sequences(self) -> List[EventSequence]:
        """All ESDs, scenario by scenario, in file order."""
        return [seq for group in self.scenarios.values() for seq in group]

    @property
    def num_sequences(self) -> int:
        return sum(len(group) for group in self.scenarios.values())


class LabeledPair(BaseModel):
    """Evaluation pair; gold is True iff e1 stereotypically precedes e2."""
    model_config = ConfigDict(frozen=True)

    scenario: str = Field(min_length=1)
    e1: Event
    e2: Event
    gold: bool
