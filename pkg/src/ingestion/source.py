"""Z-score source interface."""

from abc import ABC, abstractmethod

from ..models.analysis import ZScoreMatrix


class ZScoreSource(ABC):
    """Abstract interface for sources of per-study marker z-scores."""

    def __init__(self, source_id: str, config: dict):
        """Initialize source with source ID and configuration."""
        self.source_id = source_id
        self.config = config

    @abstractmethod
    def load(self) -> ZScoreMatrix:
        """Read the full studies x markers matrix."""
        pass

    @abstractmethod
    def health_check(self) -> bool:
        """Check if the source is accessible."""
        pass
