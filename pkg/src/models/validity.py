"""Validity check data models."""

from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from ..errors import DomainError

ORDER_TOLERANCE = 1e-9


@dataclass
class CdfCurve:
    """Distribution function evaluated on a grid of probabilities."""
    grid: np.ndarray
    values: np.ndarray
    label: str

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.grid.shape != self.values.shape or self.grid.ndim != 1:
            raise DomainError("curve grid and values must be 1-d and equally long")
        order = np.argsort(self.grid, kind="stable")
        if np.any(np.diff(self.values[order]) < -ORDER_TOLERANCE):
            raise DomainError(f"curve {self.label!r} decreases along its grid")


@dataclass(frozen=True)
class OrderCheckReport:
    """
    Outcome of a numeric order or validity check.

    ``holds_from`` is the smallest grid point from which the ordering holds up to
    the end of the grid (None when it fails at the last point). Checks made of
    several pointwise inequalities report each one under ``legs``.
    """
    holds: bool
    max_violation: float
    witness: Optional[float] = None
    tolerance: float = ORDER_TOLERANCE
    regime: Optional[str] = None
    holds_from: Optional[float] = None
    legs: Dict[str, "OrderCheckReport"] = field(default_factory=dict, compare=False)

    @classmethod
    def from_violations(
        cls,
        grid: np.ndarray,
        violations: np.ndarray,
        tolerance: float = ORDER_TOLERANCE,
        regime: Optional[str] = None,
    ) -> "OrderCheckReport":
        """Build a report from pointwise violations (positive means broken)."""
        grid = np.asarray(grid, dtype=float)
        violations = np.asarray(violations, dtype=float)
        if violations.size == 0:
            return cls(holds=True, max_violation=0.0, tolerance=tolerance, regime=regime)
        worst = int(np.argmax(violations))
        max_violation = max(float(violations[worst]), 0.0)
        witness = float(grid[worst]) if max_violation > 0 else None

        broken = np.flatnonzero(violations > tolerance)
        if broken.size == 0:
            holds_from = float(grid[0])
        elif broken[-1] + 1 < grid.size:
            holds_from = float(grid[broken[-1] + 1])
        else:
            holds_from = None
        return cls(
            holds=max_violation <= tolerance,
            max_violation=max_violation,
            witness=witness,
            tolerance=tolerance,
            regime=regime,
            holds_from=holds_from,
        )
