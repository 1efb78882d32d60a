import numpy as np
import pytest

from app.models.metrics import Metrics


class TestMetrics:
    """Test Metrics arithmetic and rendering."""

    def test_from_counts(self):
        m = Metrics.from_counts(tp=2, fp=1, fn=1)
        assert m.precision == pytest.approx(0.6667, abs=1e-4)
        assert m.recall == pytest.approx(0.6667, abs=1e-4)
        assert m.f1 == pytest.approx(0.6667, abs=1e-4)

    def test_no_positive_predictions(self):
        m = Metrics.from_counts(tp=0, fp=0, fn=5, tn=5)
        assert (m.precision, m.recall, m.f1) == (0.0, 0.0, 0.0)

    def test_empty_tally(self):
        m = Metrics.from_counts(0, 0, 0)
        assert m.f1 == 0.0

    def test_from_predictions(self):
        m = Metrics.from_predictions([True, True, False, False, True], [True, False, True, False, True])
        assert (m.tp, m.fp, m.fn, m.tn) == (2, 1, 1, 1)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            Metrics.from_predictions([True, False], [True])

    def test_matches_brute_force_tally(self):
        rng = np.random.default_rng(42)
        for _ in range(200):
            n = int(rng.integers(1, 40))
            preds = [bool(v) for v in rng.integers(0, 2, size=n)]
            golds = [bool(v) for v in rng.integers(0, 2, size=n)]
            m = Metrics.from_predictions(preds, golds)

            tp = sum(p and g for p, g in zip(preds, golds))
            fp = sum(p and not g for p, g in zip(preds, golds))
            fn = sum(g and not p for p, g in zip(preds, golds))
            tn = n - tp - fp - fn
            assert (m.tp, m.fp, m.fn, m.tn) == (tp, fp, fn, tn)

            precision = tp / (tp + fp) if tp + fp else 0.0
            recall = tp / (tp + fn) if tp + fn else 0.0
            f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
            assert (m.precision, m.recall, m.f1) == (precision, recall, f1)

    def test_render(self):
        line = Metrics.from_counts(tp=2, fp=1, fn=1, tn=3).render()
        assert line == "precision=0.6667 recall=0.6667 f1=0.6667 tp=2 fp=1 fn=1 tn=3"
