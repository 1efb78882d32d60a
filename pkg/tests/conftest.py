import numpy as np
import pytest

from app.models.events import Event, EventSequence
from app.models.params import EmbeddingTable, ModelParams


def _event(text: str) -> Event:
    tokens = text.split()
    return Event(predicate=tokens[0], args=tuple(tokens[1:]))


@pytest.fixture
def ev():
    """ev("fill water maker") -> Event(predicate="fill", args=("water", "maker"))"""
    return _event


@pytest.fixture
def seq():
    def _seq(*texts: str, scenario: str = "coffee") -> EventSequence:
        return EventSequence(scenario=scenario, events=tuple(_event(t) for t in texts))
    return _seq


@pytest.fixture
def make_params():
    """Random (normal) parameters so every block carries gradient signal."""
    def _make(vocab=("go", "fill", "maker", "water", "place"), dims=(3, 4, 2), seed=0, w_scale=2.0):
        rng = np.random.default_rng(seed)
        d, h, e = dims
        table = EmbeddingTable(
            vocab=tuple(vocab),
            vectors=rng.normal(size=(len(vocab), d)),
            unk=rng.normal(size=d),
        )
        return ModelParams(
            table=table,
            R=rng.normal(size=(h, d)),
            T=rng.normal(size=(h, d)),
            A=rng.normal(size=(e, h)),
            b_h=rng.normal(size=h),
            b_x=rng.normal(size=e),
            w=w_scale * rng.normal(size=e),
        )
    return _make


@pytest.fixture
def scalar_params():
    """d=h=e=1 model: c(go)=0.2, c(maker)=0.4, R=1, T=0.5, A=2, zero biases."""
    def _make(w: float = 1.0) -> ModelParams:
        table = EmbeddingTable(vocab=("go", "maker"), vectors=[[0.2], [0.4]], unk=[0.3])
        return ModelParams(
            table=table,
            R=[[1.0]],
            T=[[0.5]],
            A=[[2.0]],
            b_h=[0.0],
            b_x=[0.0],
            w=[w],
        )
    return _make
