"""Numeric checks of stochastic orders between p-value distributions."""

from dataclasses import replace
from typing import Sequence

import numpy as np

from ..errors import ConfigError, DomainError
from ..models.pvalues import ReplicabilityConfig
from ..models.validity import ORDER_TOLERANCE, OrderCheckReport
from ..numerics import (
    poisson_binomial_pmf,
    std_normal_cdf,
    std_normal_log_sf,
    std_normal_quantile,
    std_normal_sf,
)
from .exact import exact_lfc_cdf, exact_rand_cdf


def _monotonicity_violations(log_ratio: np.ndarray) -> np.ndarray:
    """Size of each decrease of a sequence that should be nondecreasing."""
    return log_ratio[:-1] - log_ratio[1:]


def check_hazard_rate_order(
    mean1: float,
    mean2: float,
    variance: float,
    grid: Sequence[float],
) -> OrderCheckReport:
    """
    Check N(mean1, variance) <=hr N(mean2, variance) on a grid.

    The order holds when the survival ratio S2(t) / S1(t) is nondecreasing;
    the ratio is compared on the log scale with tolerance 1e-9.
    """
    if not variance > 0:
        raise DomainError(f"variance must be positive, got {variance}")
    t = np.sort(np.asarray(grid, dtype=float))
    if t.ndim != 1 or t.size < 2 or not np.all(np.isfinite(t)):
        raise DomainError("grid must hold at least two finite points")
    sd = np.sqrt(variance)
    log_s1 = std_normal_log_sf((t - mean1) / sd)
    log_s2 = std_normal_log_sf((t - mean2) / sd)
    log_ratio = log_s2 - log_s1
    return OrderCheckReport.from_violations(t[1:], _monotonicity_violations(log_ratio))


def check_stochastic_sandwich(
    theta_column: Sequence[float],
    config: ReplicabilityConfig,
    n: int,
    grid: Sequence[float],
) -> OrderCheckReport:
    """
    Check the pointwise ordering of the LFC, randomized and uniform CDFs.

    A null column (fewer than gamma positive effects) must satisfy
    F_LFC <= F_rand <= t and both inequalities decide ``holds``. For an
    alternative column ``holds`` is F_rand <= F_LFC, the randomized p-value
    being stochastically larger than the LFC one. The comparison with the
    uniform is reported as the ``uniform_below_rand`` leg only: it fails near
    t = 0 for strong effects, and its ``holds_from`` gives the grid point from
    which t <= F_rand holds.
    """
    grid = np.sort(np.asarray(grid, dtype=float))
    theta = np.asarray(theta_column, dtype=float)
    lfc = exact_lfc_cdf(theta, config, n, grid)
    rand = exact_rand_cdf(theta, config, n, grid)
    t = lfc.grid

    if np.count_nonzero(theta > 0) < config.gamma:
        legs = {
            "lfc_below_rand": OrderCheckReport.from_violations(t, lfc.values - rand.values),
            "rand_below_uniform": OrderCheckReport.from_violations(t, rand.values - t),
        }
        combined = np.maximum(lfc.values - rand.values, rand.values - t)
        report = OrderCheckReport.from_violations(t, combined, regime="null")
    else:
        legs = {
            "rand_below_lfc": OrderCheckReport.from_violations(t, rand.values - lfc.values),
            "uniform_below_rand": OrderCheckReport.from_violations(t, t - rand.values),
        }
        report = replace(legs["rand_below_lfc"], regime="alternative")
    return replace(report, legs=legs)


def check_order_statistic_hazard_order(
    s: int,
    i: int,
    shifted_means: Sequence[float],
    n: int,
    grid: Sequence[float],
) -> OrderCheckReport:
    """
    Check that the i-th smallest of s variables is hr-smaller than the maximum of i uniforms.

    Variable k is X_k = Phi(sqrt(n) * mean_k + Z), i.e. one minus a Z-test
    p-value, with CDF Phi(Phi^-1(y) - sqrt(n) * mean_k). The survival of the
    order statistic is the Poisson binomial probability of fewer than i
    successes; the maximum of i uniforms has survival 1 - y**i.
    """
    means = np.asarray(shifted_means, dtype=float)
    if means.shape != (s,):
        raise ConfigError(f"expected {s} means, got shape {means.shape}")
    if not 1 <= i <= s:
        raise ConfigError(f"i must lie in [1, {s}], got {i}")
    y = np.sort(np.asarray(grid, dtype=float))
    if y.ndim != 1 or y.size < 2 or np.any((y <= 0.0) | (y >= 1.0)):
        raise DomainError("grid must hold at least two points inside (0, 1)")

    shift = np.asarray(std_normal_quantile(y))[np.newaxis, :] - np.sqrt(n) * means[:, np.newaxis]
    pmf = poisson_binomial_pmf(std_normal_cdf(shift), std_normal_sf(shift))
    order_survival = pmf[:i].sum(axis=0)
    uniform_survival = -np.expm1(i * np.log(y))

    usable = (order_survival > 0.0) & (uniform_survival > 0.0)
    with np.errstate(divide="ignore"):
        log_ratio = np.log(uniform_survival) - np.log(order_survival)
    log_ratio, points = log_ratio[usable], y[usable]
    if log_ratio.size < 2:
        return OrderCheckReport(holds=True, max_violation=0.0, tolerance=ORDER_TOLERANCE)
    return OrderCheckReport.from_violations(points[1:], _monotonicity_violations(log_ratio))
