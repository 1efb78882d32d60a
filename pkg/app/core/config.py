# app/core/config.py
import os
from typing import Tuple

from dotenv import load_dotenv

# .env 파일 로드 (LOG_LEVEL 전용)
load_dotenv()


class Settings:
    # Only the log level comes from the environment; it never touches stdout.
    LOG_LEVEL: str = os.getenv("EE_LOG_LEVEL", "WARNING").upper()
    LOG_EVERY_EPOCHS: int = 20

    # Ranking / optimisation defaults
    GAMMA: float = 1.0
    ETA: float = 0.01
    LAMBDA: float = 1e-4
    EPOCHS: int = 200
    SEED: int = 0
    DIMS: Tuple[int, int, int] = (50, 50, 50)  # (d, h, e)

    # Initialisation
    EMBED_INIT_RANGE: float = 0.1

    # Gradient check
    FD_STEP: float = 1e-5

    # Synthetic corpora
    SYNTH_TYPES: int = 10
    SYNTH_ESDS: int = 30
    SYNTH_DROPOUT: float = 0.2
    SYNTH_VARIANTS: int = 2
    SYNTH_PREDICATE_GROUPS: int = 2
    SYNTH_SCENARIO: str = "synthetic"

    MODEL_MAGIC: str = "EEMODEL v1"


settings = Settings()
