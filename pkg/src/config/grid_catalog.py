"""Catalog of the simulation grids shipped in the grids directory."""

import logging
from pathlib import Path
from typing import Dict, List, Optional

from ..errors import ConfigError
from ..models.simulation import SimulationSetting
from .grid_loader import GridDefinition, read_grid_file
from .models import EngineConfig

logger = logging.getLogger(__name__)


class GridCatalog:
    """Loads grid YAML files from a directory and indexes them by name."""

    def __init__(self, grids_dir: Optional[str] = None):
        """
        Initialize the catalog.

        Args:
            grids_dir: Directory containing grid YAML files.
                       Defaults to 'grids' directory in project root.
        """
        if grids_dir is None:
            project_root = Path(__file__).parent.parent.parent
            grids_dir = str(project_root / "grids")

        self.grids_dir = Path(grids_dir)
        self.grids: Dict[str, GridDefinition] = {}
        self._load_grids()

    def _load_grids(self) -> None:
        """Load all grid files (.yaml and .cfg) from the grids directory."""
        if not self.grids_dir.exists():
            logger.warning("Grids directory not found: %s", self.grids_dir)
            return

        files = sorted(self.grids_dir.glob("*.yaml")) + sorted(self.grids_dir.glob("*.cfg"))
        for grid_file in files:
            try:
                grid = read_grid_file(grid_file)
            except ConfigError as e:
                logger.error("Skipping grid %s: %s", grid_file, e)
                continue
            # Index by both name and file stem
            self.grids[grid.name] = grid
            self.grids.setdefault(grid_file.stem, grid)

    def get_grid(self, identifier: str) -> Optional[GridDefinition]:
        """
        Get a grid by name or file stem.

        Args:
            identifier: Grid name or file stem

        Returns:
            GridDefinition or None if not found
        """
        return self.grids.get(identifier)

    def resolve(self, name_or_path: str) -> GridDefinition:
        """A catalog entry, or a grid file when the argument is an existing path."""
        path = Path(name_or_path)
        if path.is_file():
            return read_grid_file(path)
        grid = self.get_grid(name_or_path)
        if grid is None:
            known = ", ".join(self.list_grids()) or "none"
            raise ConfigError(f"unknown grid {name_or_path!r} (known: {known})")
        return grid

    def settings(self, name_or_path: str, engine: Optional[EngineConfig] = None) -> List[SimulationSetting]:
        """Expanded settings of a grid."""
        return self.resolve(name_or_path).settings(engine)

    def list_grids(self) -> List[str]:
        """Names of all available grids."""
        return sorted({grid.name for grid in self.grids.values()})
