import pytest
from pydantic import ValidationError

from app.models.events import Corpus, Event, EventSequence, LabeledPair, normalize_lemma


class TestEvent:
    """Test Event model validation."""

    def test_predicate_only(self):
        event = Event(predicate="go")
        assert event.args == ()
        assert event.lemmas == ("go",)

    def test_case_folding(self):
        event = Event(predicate="Fill", args=("WATER", "Maker"))
        assert event.lemmas == ("fill", "water", "maker")

    def test_argument_order_kept(self):
        assert Event(predicate="fill", args=("water", "maker")).args == ("water", "maker")

    @pytest.mark.parametrize("bad", ["", "coffee maker", "tab\there"])
    def test_invalid_lemma(self, bad):
        with pytest.raises(ValidationError):
            Event(predicate=bad)
        with pytest.raises(ValidationError):
            Event(predicate="go", args=(bad,))

    def test_frozen_and_hashable(self):
        event = Event(predicate="go", args=("maker",))
        with pytest.raises(ValidationError):
            event.predicate = "fill"
        assert {event, Event(predicate="GO", args=("maker",))} == {event}

    def test_normalize_lemma(self):
        assert normalize_lemma("Turn_On") == "turn_on"
        with pytest.raises(ValueError):
            normalize_lemma("")


class TestEventSequence:

    def test_length(self):
        seq = EventSequence(scenario="coffee", events=(Event(predicate="go"), Event(predicate="fill")))
        assert len(seq) == 2

    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            EventSequence(scenario="coffee", events=())

    def test_rejects_empty_scenario(self):
        with pytest.raises(ValidationError):
            EventSequence(scenario="", events=(Event(predicate="go"),))


class TestCorpus:

    def test_key_must_match_scenario(self, seq):
        with pytest.raises(ValidationError):
            Corpus(scenarios={"bus": [seq("go", scenario="coffee")]})

    def test_sequences_in_order(self, seq):
        a, b, c = seq("go"), seq("fill"), seq("board", scenario="bus")
        corpus = Corpus(scenarios={"coffee": [a, b], "bus": [c]})
        assert corpus.sequences() == [a, b, c]
        assert corpus.num_sequences == 3

    def test_empty(self):
        assert Corpus().sequences() == []


class TestLabeledPair:

    def test_fields(self, ev):
        pair = LabeledPair(scenario="coffee", e1=ev("go maker"), e2=ev("fill water"), gold=True)
        assert pair.gold is True
        assert pair.e2.predicate == "fill"

    def test_requires_scenario(self, ev):
        with pytest.raises(ValidationError):
            LabeledPair(scenario="", e1=ev("go"), e2=ev("fill"), gold=False)
