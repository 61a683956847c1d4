"""Exact CDFs of the replicability p-values for a fixed effect column (Z model)."""

from typing import Sequence

import numpy as np

from ..errors import ConfigError, DomainError, PreconditionError
from ..models.pvalues import ReplicabilityConfig
from ..models.validity import CdfCurve, OrderCheckReport
from ..numerics import poisson_binomial_tail, std_normal_cdf, std_normal_quantile
from ..numerics.validation import check_probability
from ..replicability import threshold_c


def _theta_column(theta_column: Sequence[float], config: ReplicabilityConfig) -> np.ndarray:
    theta = np.asarray(theta_column, dtype=float)
    if theta.ndim != 1 or theta.size != config.s:
        raise ConfigError(f"expected {config.s} effects, got shape {theta.shape}")
    if np.any(np.isnan(theta)):
        raise DomainError("effects contain NaN")
    return theta


def _grid(grid: Sequence[float]) -> np.ndarray:
    values = check_probability(grid, "grid")
    if values.ndim != 1 or values.size == 0:
        raise DomainError("grid must be a non-empty 1-d sequence")
    return values


def per_study_success(theta: np.ndarray, n: int, x: np.ndarray) -> np.ndarray:
    """
    P(p_i <= x) for each study effect (rows) and threshold (columns).

    Equals Phi(sqrt(n) * theta_i - Phi^-1(1 - x)). An effect of +inf gives a
    p-value of 0 almost surely, -inf a p-value of 1.
    """
    theta = np.asarray(theta, dtype=float)[:, np.newaxis]
    x = np.asarray(x, dtype=float)[np.newaxis, :]
    interior = (x > 0.0) & (x < 1.0)
    z = -np.asarray(std_normal_quantile(np.where(interior, x, 0.5)))
    finite = np.isfinite(theta)
    shift = np.sqrt(n) * np.where(finite, theta, 0.0) - z
    prob = np.asarray(std_normal_cdf(shift))

    prob = np.where(theta == np.inf, 1.0, prob)
    prob = np.where(theta == -np.inf, 0.0, prob)
    prob = np.where(x <= 0.0, np.where(theta == np.inf, 1.0, 0.0), prob)
    prob = np.where(x >= 1.0, 1.0, prob)
    return prob


def _lfc_values(theta: np.ndarray, config: ReplicabilityConfig, n: int, t: np.ndarray) -> np.ndarray:
    # p_LFC <= t  iff  p_(gamma) <= 1 - (1 - t)**(1/k)
    with np.errstate(divide="ignore"):
        x = -np.expm1(np.log1p(-t) / config.k)
    x = np.where(t >= 1.0, 1.0, x)
    probs = per_study_success(theta, n, x)
    return np.atleast_1d(poisson_binomial_tail(probs, config.gamma))


def exact_lfc_cdf(
    theta_column: Sequence[float],
    config: ReplicabilityConfig,
    n: int,
    grid: Sequence[float],
) -> CdfCurve:
    """Exact P(p_LFC <= t) on the grid, via the Poisson binomial tail over studies."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    theta = _theta_column(theta_column, config)
    t = _grid(grid)
    return CdfCurve(grid=t, values=_lfc_values(theta, config, n, t), label="lfc")


def exact_rand_cdf(
    theta_column: Sequence[float],
    config: ReplicabilityConfig,
    n: int,
    grid: Sequence[float],
) -> CdfCurve:
    """Exact P(p_rand <= t) = t * (1 - F(c)) + F(t * c), F the LFC p-value CDF."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    theta = _theta_column(theta_column, config)
    t = _grid(grid)
    c = threshold_c(config)
    at_c = _lfc_values(theta, config, n, np.array([c]))[0]
    values = t * (1.0 - at_c) + _lfc_values(theta, config, n, t * c)
    return CdfCurve(grid=t, values=np.clip(values, 0.0, 1.0), label="rand")


def check_validity_condition(
    theta_column: Sequence[float],
    config: ReplicabilityConfig,
    n: int,
    z_grid: Sequence[float],
) -> OrderCheckReport:
    """
    Check P(p_LFC <= z) <= z * P(estimate in alternative) / c on [0, c].

    This is the condition under which the randomized p-value is valid at a
    null effect column.
    """
    theta = _theta_column(theta_column, config)
    if np.count_nonzero(theta > 0) >= config.gamma:
        raise PreconditionError("effect column lies in the alternative (gamma or more positive effects)")
    z = _grid(z_grid)
    c = threshold_c(config)
    if np.any(z > c):
        raise DomainError(f"z_grid must lie in [0, c={c:.6g}]")

    left = _lfc_values(theta, config, n, z)
    # estimate in alternative iff p_LFC < c; continuous at finite effects
    p_alternative = _lfc_values(theta, config, n, np.array([c]))[0]
    right = z * p_alternative / c
    return OrderCheckReport.from_violations(z, left - right)
