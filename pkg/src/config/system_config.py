"""Main system configuration."""

from dataclasses import dataclass, field
from typing import Optional

from .env_loader import load_engine_config, load_grids_config, load_logging_config
from .models import EngineConfig, GridsConfig, LoggingConfig


@dataclass
class SystemConfig:
    """Main system configuration."""
    engine: EngineConfig = field(default_factory=EngineConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    grids: GridsConfig = field(default_factory=GridsConfig)

    @classmethod
    def from_env(cls) -> "SystemConfig":
        """Load configuration from environment variables."""
        return cls(
            engine=load_engine_config(),
            logging=load_logging_config(),
            grids=load_grids_config(),
        )


# Global config instance
_config: Optional[SystemConfig] = None


def load_config() -> SystemConfig:
    """Load and return system configuration."""
    global _config
    if _config is None:
        _config = SystemConfig.from_env()
    return _config


def get_config() -> SystemConfig:
    """Get current system configuration."""
    if _config is None:
        return load_config()
    return _config


def reset_config() -> None:
    """Forget the cached configuration so the next call re-reads the environment."""
    global _config
    _config = None
