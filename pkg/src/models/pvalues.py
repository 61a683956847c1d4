"""P-value data models."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from ..errors import ConfigError, DomainError


class MarginalModelKind(str, Enum):
    """Per-study one-sided test model."""
    Z_KNOWN_UNIT_VARIANCE = "z"
    T_UNKNOWN_VARIANCE = "t"


class PValueKind(str, Enum):
    """Kinds of replicability p-value produced by the simulator."""
    LFC = "lfc"
    RAND = "rand"
    STOUFFER = "stouffer"
    FISHER = "fisher"


@dataclass(frozen=True)
class StudySample:
    """Observations of one study for one endpoint."""
    observations: Tuple[float, ...]

    def __post_init__(self):
        values = np.asarray(self.observations, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise DomainError("a study sample needs at least one observation")
        if not np.all(np.isfinite(values)):
            raise DomainError("observations must be finite")
        object.__setattr__(self, "observations", tuple(float(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.observations)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.observations, dtype=float)


@dataclass(frozen=True)
class MarginalResult:
    """Test statistic, LFC p-value and estimator sign of one study."""
    statistic: float
    lfc_pvalue: float
    estimator_positive: bool


@dataclass(frozen=True)
class ReplicabilityConfig:
    """Partial-conjunction setup: s studies, replication in at least gamma of them."""
    s: int
    gamma: int
    d: float = 0.5

    def __post_init__(self):
        if self.s < 2:
            raise ConfigError(f"s must be at least 2, got {self.s}")
        if not 2 <= self.gamma <= self.s:
            raise ConfigError(f"gamma must lie in [2, s={self.s}], got {self.gamma}")
        if not 0.0 < self.d < 1.0:
            raise ConfigError(f"d must lie in (0, 1), got {self.d}")

    @property
    def k(self) -> int:
        """Number of order statistics that enter the test, s - gamma + 1."""
        return self.s - self.gamma + 1


@dataclass(frozen=True)
class PValueRecord:
    """Per-endpoint bundle of replicability p-values."""
    per_study: Tuple[float, ...]
    lfc: float
    randomized: float
    uniform_used: float
    in_alternative_estimate: bool


@dataclass(frozen=True)
class Pi0Estimate:
    """Schweder-Spjotvoll estimate of the proportion of true nulls."""
    value: float
    lambda_: float
    count_above: int
    m: int
    kind: Optional[PValueKind] = None
