"""Load configuration from environment variables."""

import os

from ..errors import ConfigError
from .models import DEFAULT_LOG_FORMAT, EngineConfig, GridsConfig, LoggingConfig


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}")
    return value


def load_engine_config() -> EngineConfig:
    """Load Monte Carlo settings from environment."""
    return EngineConfig(
        workers=_int_env("RANDREP_WORKERS", 1, 1),
        chunk_size=_int_env("RANDREP_CHUNK_SIZE", 250, 1),
        seed=_int_env("RANDREP_SEED", 20240101, 0),
        reps=_int_env("RANDREP_REPS", 10000, 1),
    )


def load_logging_config() -> LoggingConfig:
    """Load logging settings from environment."""
    return LoggingConfig(
        level=os.getenv("RANDREP_LOG_LEVEL", "INFO").upper(),
        format=os.getenv("RANDREP_LOG_FORMAT", DEFAULT_LOG_FORMAT),
    )


def load_grids_config() -> GridsConfig:
    """Load grid directory location from environment."""
    return GridsConfig(grids_dir=os.getenv("RANDREP_GRIDS_DIR"))
