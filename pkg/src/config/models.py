"""Configuration data models."""

from dataclasses import dataclass
from typing import Optional

DEFAULT_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass
class EngineConfig:
    """Monte Carlo execution settings."""
    workers: int = 1
    chunk_size: int = 250
    seed: int = 20240101
    reps: int = 10000


@dataclass
class LoggingConfig:
    """Logging setup for the command line."""
    level: str = "INFO"
    format: str = DEFAULT_LOG_FORMAT


@dataclass
class GridsConfig:
    """Location of the simulation grid YAML files."""
    grids_dir: Optional[str] = None  # Defaults to 'grids' in project root
