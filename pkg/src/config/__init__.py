"""Configuration management."""

from .grid_catalog import GridCatalog
from .grid_loader import GridDefinition, expand_grid, read_grid_file
from .models import EngineConfig, GridsConfig, LoggingConfig
from .system_config import SystemConfig, get_config, load_config, reset_config

__all__ = [
    "GridCatalog",
    "GridDefinition",
    "expand_grid",
    "read_grid_file",
    "EngineConfig",
    "GridsConfig",
    "LoggingConfig",
    "SystemConfig",
    "get_config",
    "load_config",
    "reset_config",
]
