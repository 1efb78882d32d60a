import itertools

import pytest
from pydantic import ValidationError

from app.models.hyperparams import SynthConfig
from app.utils.corpus_io import serialize_corpus, serialize_pairs
from app.utils.synthetic import generate_synthetic


@pytest.mark.unit
class TestGenerateSynthetic:

    def test_no_dropout_single_variant_gives_identical_esds(self):
        config = SynthConfig(num_event_types=6, esds_per_scenario=5, dropout=0.0, lexical_variants=1, seed=3)
        corpus, _ = generate_synthetic(config)
        sequences = corpus.sequences()
        assert len(sequences) == 5
        assert all(len(s) == 6 for s in sequences)
        assert all(s.events == sequences[0].events for s in sequences)

    @pytest.mark.parametrize("types", [2, 5, 10])
    def test_pair_count_covers_both_orientations(self, types):
        _, pairs = generate_synthetic(SynthConfig(num_event_types=types, seed=1))
        assert len(pairs) == types * (types - 1)
        assert sum(p.gold for p in pairs) == types * (types - 1) // 2
        keyed = {(p.e1, p.e2): p.gold for p in pairs}
        for (e1, e2), gold in keyed.items():
            assert keyed[(e2, e1)] is (not gold)

    def test_same_seed_same_text(self):
        config = SynthConfig(seed=9)
        c1, p1 = generate_synthetic(config)
        c2, p2 = generate_synthetic(config)
        assert serialize_corpus(c1) == serialize_corpus(c2)
        assert serialize_pairs(p1) == serialize_pairs(p2)

    def test_different_seed_different_text(self):
        c1, _ = generate_synthetic(SynthConfig(seed=1))
        c2, _ = generate_synthetic(SynthConfig(seed=2))
        assert serialize_corpus(c1) != serialize_corpus(c2)

    def test_esds_follow_latent_order(self):
        corpus, pairs = generate_synthetic(SynthConfig(num_event_types=8, esds_per_scenario=20, seed=5))
        # argument lemma identifies the event type
        rank = {}
        for p in pairs:
            if p.gold:
                rank.setdefault(p.e1.args[0], set()).add(p.e2.args[0])
        for seq in corpus.sequences():
            types = [e.args[0] for e in seq.events]
            for a, b in itertools.combinations(types, 2):
                assert b in rank[a]

    def test_dropout_never_empties_an_esd(self):
        corpus, _ = generate_synthetic(SynthConfig(num_event_types=2, esds_per_scenario=50, dropout=0.95, seed=0))
        assert all(len(s) >= 1 for s in corpus.sequences())

    def test_lexical_variants_bound_predicates(self):
        corpus, _ = generate_synthetic(SynthConfig(num_event_types=4, lexical_variants=3, seed=2))
        suffixes = {e.predicate[-1] for s in corpus.sequences() for e in s.events}
        assert suffixes <= {"a", "b", "c"}

    def test_arg_determined_shares_predicates(self):
        config = SynthConfig(
            num_event_types=10, lexical_variants=1, dropout=0.0, arg_determined=True, predicate_groups=2, seed=0
        )
        corpus, _ = generate_synthetic(config)
        (esd,) = {s.events for s in corpus.sequences()}
        predicates = [e.predicate for e in esd]
        assert predicates == ["verb0a", "verb1a"] * 5
        assert len({e.args for e in esd}) == 10

    def test_plain_types_have_distinct_predicates(self):
        config = SynthConfig(num_event_types=10, lexical_variants=1, dropout=0.0, seed=0)
        corpus, _ = generate_synthetic(config)
        esd = corpus.sequences()[0]
        assert len({e.predicate for e in esd.events}) == 10

    def test_scenario_name(self):
        corpus, pairs = generate_synthetic(SynthConfig(scenario="bus", seed=0))
        assert list(corpus.scenarios) == ["bus"]
        assert {p.scenario for p in pairs} == {"bus"}


@pytest.mark.unit
class TestSynthConfig:

    @pytest.mark.parametrize(
        "overrides",
        [
            {"num_event_types": 1},
            {"esds_per_scenario": 0},
            {"dropout": 1.0},
            {"dropout": -0.1},
            {"lexical_variants": 0},
            {"lexical_variants": 27},
            {"predicate_groups": 0},
            {"scenario": "two words"},
            {"seed": -1},
        ],
    )
    def test_rejects_invalid(self, overrides):
        with pytest.raises(ValidationError):
            SynthConfig(**overrides)

    def test_defaults(self):
        config = SynthConfig()
        assert (config.num_event_types, config.esds_per_scenario, config.dropout, config.lexical_variants) == (
            10,
            30,
            0.2,
            2,
        )
        assert config.arg_determined is False
