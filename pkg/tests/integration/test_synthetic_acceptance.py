"""End-to-end learning runs on synthetic script corpora at default hyperparameters."""
import numpy as np
import pytest

from app.models.hyperparams import Hyperparams, SynthConfig
from app.services.evaluation.pair_eval import evaluate
from app.services.evaluation.verb_baseline import evaluate_bl, train_bl
from app.services.training.learner import train
from app.utils.synthetic import generate_synthetic

pytestmark = [pytest.mark.integration, pytest.mark.slow]


def test_full_model_learns_plain_script():
    corpus, pairs = generate_synthetic(SynthConfig(num_event_types=10, esds_per_scenario=30, dropout=0.2,
                                                   lexical_variants=2, seed=0))
    params, history = train(corpus, Hyperparams())

    assert evaluate(pairs, params).f1 >= 0.90
    assert history.violations[-1] < history.violations[0]


class TestArgumentDeterminedScript:
    """Types of one predicate group differ only in their argument."""

    @staticmethod
    def _config(seed):
        return SynthConfig(num_event_types=10, esds_per_scenario=30, dropout=0.2, lexical_variants=1,
                           arg_determined=True, predicate_groups=2, seed=seed)

    def test_full_model_uses_arguments(self):
        corpus, pairs = generate_synthetic(self._config(0))
        params, _ = train(corpus, Hyperparams())
        assert evaluate(pairs, params).f1 >= 0.85

    def test_verb_only_model_cannot_separate_shared_predicates(self):
        corpus, pairs = generate_synthetic(self._config(0))
        params, _ = train(corpus, Hyperparams(mode="verb_only"))
        assert evaluate(pairs, params, "verb_only").f1 <= 0.65

    def test_baseline_behaves_like_a_coin(self):
        scores = []
        for seed in range(10):
            corpus, pairs = generate_synthetic(self._config(seed))
            scores.append(evaluate_bl(pairs, train_bl(corpus, seed=seed)).f1)
        assert abs(float(np.mean(scores)) - 0.5) <= 0.15
