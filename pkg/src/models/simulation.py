"""Simulation data models."""

import math
from dataclasses import dataclass, field, replace
from typing import Dict, Sequence, Tuple

import numpy as np

from ..errors import ConfigError
from .pvalues import MarginalModelKind, Pi0Estimate, PValueKind, ReplicabilityConfig

# m * pi0 must be an integer up to this slack
M0_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SimulationSetting:
    """
    Full description of one simulation experiment.

    Defaults reproduce the headline configuration: 500 endpoints, 10 studies,
    replication in at least 6 of them, 70% true nulls, per-study samples of 50.
    """
    m: int = 500
    s: int = 10
    gamma: int = 6
    pi0: float = 0.7
    mu_min: float = -1.0
    mu_max: float = 4.0
    p0: float = 0.8
    p1: float = 0.8
    n: int = 50
    lambda_: float = 0.5
    seed: int = 20240101
    reps: int = 10000
    model: MarginalModelKind = MarginalModelKind.Z_KNOWN_UNIT_VARIANCE
    pvalue_kinds: Tuple[PValueKind, ...] = (PValueKind.LFC, PValueKind.RAND)
    observations: bool = False

    def __post_init__(self):
        object.__setattr__(self, "model", MarginalModelKind(self.model))
        object.__setattr__(
            self, "pvalue_kinds", tuple(PValueKind(kind) for kind in self.pvalue_kinds)
        )
        self.validate()

    def validate(self) -> None:
        """Raise ConfigError when the setting is inconsistent."""
        if self.m < 2:
            raise ConfigError(f"m must be at least 2, got {self.m}")
        # Also checks s and gamma
        ReplicabilityConfig(self.s, self.gamma)
        if not 0.0 <= self.pi0 <= 1.0:
            raise ConfigError(f"pi0 must lie in [0, 1], got {self.pi0}")
        if abs(self.m * self.pi0 - round(self.m * self.pi0)) > M0_TOLERANCE:
            raise ConfigError(f"m * pi0 must be an integer (m={self.m}, pi0={self.pi0})")
        if not (math.isfinite(self.mu_min) and self.mu_min <= 0.0):
            raise ConfigError(f"mu_min must be finite and non-positive, got {self.mu_min}")
        if not (math.isfinite(self.mu_max) and self.mu_max > 0.0):
            raise ConfigError(f"mu_max must be finite and positive, got {self.mu_max}")
        for name in ("p0", "p1"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1], got {value}")
        min_n = 2 if self.model is MarginalModelKind.T_UNKNOWN_VARIANCE else 1
        if self.n < min_n:
            raise ConfigError(f"n must be at least {min_n} for model {self.model.value}")
        if not 0.0 <= self.lambda_ < 1.0:
            raise ConfigError(f"lambda must lie in [0, 1), got {self.lambda_}")
        if self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed}")
        if self.reps < 1:
            raise ConfigError(f"reps must be positive, got {self.reps}")
        if not self.pvalue_kinds:
            raise ConfigError("at least one p-value kind is required")

    @property
    def m0(self) -> int:
        """Number of endpoints whose null hypothesis is true."""
        return int(round(self.m * self.pi0))

    @property
    def m1(self) -> int:
        return self.m - self.m0

    @property
    def replicability(self) -> ReplicabilityConfig:
        return ReplicabilityConfig(self.s, self.gamma)

    def with_updates(self, **changes) -> "SimulationSetting":
        """Copy of the setting with some fields replaced."""
        return replace(self, **changes)


@dataclass
class EffectMatrix:
    """True effects (s x m) and the truth of each endpoint's null hypothesis."""
    effects: np.ndarray
    truth: np.ndarray
    gamma: int

    def __post_init__(self):
        self.effects = np.asarray(self.effects, dtype=float)
        self.truth = np.asarray(self.truth, dtype=bool)
        if self.effects.ndim != 2 or self.truth.shape != (self.effects.shape[1],):
            raise ConfigError("effects must be s x m and truth must have length m")
        if not np.array_equal(self.truth, self.positive_counts < self.gamma):
            raise ConfigError("truth does not match the positive-effect counts")

    @property
    def s(self) -> int:
        return self.effects.shape[0]

    @property
    def m(self) -> int:
        return self.effects.shape[1]

    @property
    def positive_counts(self) -> np.ndarray:
        """Number of studies with a positive effect, per endpoint."""
        return (self.effects > 0).sum(axis=0)


@dataclass
class ReplicationResult:
    """P-values and estimates produced by one simulated replicate."""
    replicate_index: int
    pvalues: Dict[PValueKind, np.ndarray] = field(default_factory=dict)
    estimates: Dict[PValueKind, Pi0Estimate] = field(default_factory=dict)


@dataclass(frozen=True)
class TableCell:
    """Monte Carlo summary of the estimator for one setting and p-value kind."""
    setting: SimulationSetting
    pvalue_kind: PValueKind
    mean: float
    std: float
    mc_standard_error: float

    @classmethod
    def from_values(
        cls,
        setting: SimulationSetting,
        pvalue_kind: PValueKind,
        values: Sequence[float],
    ) -> "TableCell":
        """
        Summarize replicate estimates.

        Sums use math.fsum so the result does not depend on the order in which
        replicates finished. The standard deviation uses the n - 1 divisor.
        """
        values = [float(v) for v in values]
        reps = len(values)
        if reps == 0:
            raise ConfigError("cannot summarize an empty set of replicates")
        mean = math.fsum(values) / reps
        if reps > 1:
            variance = math.fsum((v - mean) ** 2 for v in values) / (reps - 1)
        else:
            variance = 0.0
        std = math.sqrt(variance)
        return cls(
            setting=setting,
            pvalue_kind=PValueKind(pvalue_kind),
            mean=mean,
            std=std,
            mc_standard_error=std / math.sqrt(reps),
        )


@dataclass(frozen=True)
class CurveSeries:
    """One labelled curve of (x, value) points, x being t or lambda."""
    kind: str
    x: Tuple[float, ...]
    values: Tuple[float, ...]

    def __post_init__(self):
        if len(self.x) != len(self.values):
            raise ConfigError("curve abscissae and values differ in length")
