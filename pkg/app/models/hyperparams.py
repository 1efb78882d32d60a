# app/models/hyperparams.py
from typing import Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.core.config import settings
from app.models.events import Mode

Dims = Tuple[int, int, int]


class Hyperparams(BaseModel):
    """Training configuration; `lam` is the weight-decay strength (Gaussian prior)."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False, populate_by_name=True)

    gamma: float = Field(default=settings.GAMMA, gt=0, description="Fixed global ranking margin")
    eta: float = Field(default=settings.ETA, gt=0, description="Learning rate")
    lam: float = Field(default=settings.LAMBDA, ge=0, alias="lambda")
    epochs: int = Field(default=settings.EPOCHS, ge=0)
    seed: int = Field(default=settings.SEED, ge=0)
    mode: Mode = "full"
    freeze_embeddings: bool = False
    shuffle: bool = False
    dims: Dims = settings.DIMS

    @field_validator("dims")
    @classmethod
    def validate_dims(cls, v: Dims) -> Dims:
        if any(n < 1 for n in v):
            raise ValueError(f"dimensions must be positive, got {v}")
        return v


class SynthConfig(BaseModel):
    """Synthetic script corpus with a latent total order over event types."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    num_event_types: int = Field(default=settings.SYNTH_TYPES, ge=2)
    esds_per_scenario: int = Field(default=settings.SYNTH_ESDS, ge=1)
    dropout: float = Field(default=settings.SYNTH_DROPOUT, ge=0.0, lt=1.0)
    lexical_variants: int = Field(default=settings.SYNTH_VARIANTS, ge=1, le=26)
    arg_determined: bool = False
    # 공유 predicate 개수 (arg_determined 일 때만 사용)
    predicate_groups: int = Field(default=settings.SYNTH_PREDICATE_GROUPS, ge=1)
    scenario: str = Field(default=settings.SYNTH_SCENARIO, min_length=1, pattern=r"^\S+$")
    seed: int = Field(default=settings.SEED, ge=0)


Subcommand = Literal["train", "eval", "order", "baseline", "synth", "report"]


class CliConfig(BaseModel):
    """Resolved configuration of one CLI run, logged as the run banner."""
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    paths: Dict[str, Optional[str]] = Field(default_factory=dict)
    hyper: Optional[Hyperparams] = None
    synth: Optional[SynthConfig] = None
    mode: Mode = "full"
    seed: int = Field(default=settings.SEED, ge=0)
