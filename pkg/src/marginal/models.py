"""Per-study one-sided tests: Z-test with unit variance and one-sample t-test."""

from typing import Union

import numpy as np

from ..errors import DegenerateSampleError, DomainError
from ..models.pvalues import MarginalModelKind, MarginalResult, StudySample
from ..numerics.distributions import std_normal_sf, student_t_cdf
from ..numerics.validation import ArrayLike, check_finite, check_probability, unwrap

Real = Union[float, np.ndarray]

# Per-study sign threshold: estimate > 0 iff LFC p-value < 1/2
SIGN_THRESHOLD = 0.5


def _observations(sample: Union[StudySample, ArrayLike]) -> np.ndarray:
    if isinstance(sample, StudySample):
        return sample.as_array()
    return check_finite(sample, "observations")


def marginal_statistic(sample: Union[StudySample, ArrayLike], kind: MarginalModelKind) -> Real:
    """
    Test statistic of a study sample.

    Z kind returns the sample mean; T kind returns sqrt(n) * mean / sd with the
    n - 1 divisor. Arrays are reduced along the last axis.
    """
    kind = MarginalModelKind(kind)
    obs = _observations(sample)
    if obs.ndim == 0 or obs.shape[-1] == 0:
        raise DomainError("a study sample needs at least one observation")
    n = obs.shape[-1]
    mean = obs.mean(axis=-1)
    if kind is MarginalModelKind.Z_KNOWN_UNIT_VARIANCE:
        return unwrap(mean)

    if n < 2:
        raise DomainError("the t statistic needs at least two observations")
    sd = obs.std(axis=-1, ddof=1)
    if np.any(sd == 0.0):
        raise DegenerateSampleError("sample variance is zero")
    return unwrap(np.sqrt(n) * mean / sd)


def marginal_lfc_pvalue(statistic: ArrayLike, kind: MarginalModelKind, n: int) -> Real:
    """One-sided p-value at the least favourable null (true effect 0)."""
    kind = MarginalModelKind(kind)
    stat = check_finite(statistic, "statistic")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if kind is MarginalModelKind.Z_KNOWN_UNIT_VARIANCE:
        return std_normal_sf(np.sqrt(n) * stat)
    if n < 2:
        raise DomainError("the t-test needs n >= 2")
    return student_t_cdf(-stat, n - 1)


def marginal_randomized_pvalue(lfc_pvalue: ArrayLike, u: ArrayLike) -> Real:
    """
    Randomized single-study p-value.

    Returns 2p when p < 1/2 and u when p > 1/2. The tie p = 1/2 maps to 1.
    """
    p = check_probability(lfc_pvalue, "lfc_pvalue")
    u = check_probability(u, "u")
    result = np.where(p < SIGN_THRESHOLD, 2.0 * p, u)
    result = np.where(p == SIGN_THRESHOLD, 1.0, result)
    return unwrap(result)


def evaluate_study(sample: Union[StudySample, ArrayLike], kind: MarginalModelKind) -> MarginalResult:
    """Statistic, LFC p-value and estimator sign for one study."""
    obs = _observations(sample)
    statistic = float(marginal_statistic(obs, kind))
    pvalue = float(marginal_lfc_pvalue(statistic, kind, obs.shape[-1]))
    return MarginalResult(
        statistic=statistic,
        lfc_pvalue=pvalue,
        estimator_positive=statistic > 0.0,
    )


def draw_lfc_pvalues(
    rng: np.random.Generator,
    theta: np.ndarray,
    n: int,
    kind: MarginalModelKind,
    observations: bool = False,
) -> np.ndarray:
    """
    Simulate per-study data for an effect array and return LFC p-values.

    For the Z model without ``observations`` the sample mean is drawn from its
    exact law N(theta, 1/n). Otherwise n unit-variance observations are drawn
    per cell and reduced with ``marginal_statistic``.
    """
    kind = MarginalModelKind(kind)
    theta = np.asarray(theta, dtype=float)
    if kind is MarginalModelKind.Z_KNOWN_UNIT_VARIANCE and not observations:
        means = theta + rng.standard_normal(theta.shape) / np.sqrt(n)
        return np.asarray(marginal_lfc_pvalue(means, kind, n))

    data = theta[..., np.newaxis] + rng.standard_normal(theta.shape + (n,))
    stats = marginal_statistic(data, kind)
    return np.asarray(marginal_lfc_pvalue(stats, kind, n))
