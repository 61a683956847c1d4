"""Semi-analytic expectation of the proportion-of-nulls estimator (Z model)."""

import logging
from typing import Sequence

import numpy as np
from scipy import stats

from ..errors import ConfigError, UnsupportedModelError
from ..models.pvalues import MarginalModelKind, PValueKind
from ..models.simulation import CurveSeries, SimulationSetting
from ..numerics import poisson_binomial_tail, std_normal_cdf, std_normal_quantile
from ..numerics.validation import check_probability
from ..replicability import threshold_c

logger = logging.getLogger(__name__)

# Below this width (in sqrt(n)-scaled units) the uniform effect law is
# treated as a point mass at its midpoint.
POINT_MASS_WIDTH = 1e-9


def _normal_partial_expectation(u: np.ndarray) -> np.ndarray:
    """Antiderivative of Phi: u * Phi(u) + phi(u)."""
    return u * np.asarray(std_normal_cdf(u)) + np.exp(-0.5 * u * u) / np.sqrt(2.0 * np.pi)


def _critical_values(x: np.ndarray) -> np.ndarray:
    """z such that a study p-value is <= x iff sqrt(n) * mean >= z; 0 outside (0, 1)."""
    interior = (x > 0.0) & (x < 1.0)
    z = -np.asarray(std_normal_quantile(np.where(interior, x, 0.5)))
    return np.where(interior, z, 0.0)


def uniform_effect_success(x: np.ndarray, low: float, high: float, n: int) -> np.ndarray:
    """
    P(study p-value <= x) averaged over an effect drawn Uniform(low, high].

    For a fixed effect theta this is Phi(sqrt(n) * theta - z_x); the average
    over theta has the closed form [G(u_high) - G(u_low)] / (u_high - u_low)
    with G the antiderivative of Phi.
    """
    x = np.asarray(x, dtype=float)
    root_n = np.sqrt(n)
    z = _critical_values(x)

    u_low = root_n * low - z
    u_high = root_n * high - z
    width = root_n * (high - low)
    if width < POINT_MASS_WIDTH:
        mean = np.asarray(std_normal_cdf(0.5 * (u_low + u_high)))
    else:
        mean = (_normal_partial_expectation(u_high) - _normal_partial_expectation(u_low)) / width

    mean = np.where(x <= 0.0, 0.0, mean)
    mean = np.where(x >= 1.0, 1.0, mean)
    return np.clip(mean, 0.0, 1.0)


def _order_statistic_cdf(setting: SimulationSetting, x: np.ndarray, truth: bool) -> np.ndarray:
    """
    P(p_(gamma) <= x) for a true-null (``truth``) or false-null endpoint.

    Studies are exchangeable given the number K of positive effects, so the
    tail for each K is a Poisson binomial over K positive-effect studies and
    s - K non-positive ones, mixed over the binomial law of K.
    """
    s, gamma = setting.s, setting.gamma
    q_nonpositive = uniform_effect_success(x, setting.mu_min / np.sqrt(setting.n), 0.0, setting.n)
    q_positive = uniform_effect_success(x, 0.0, setting.mu_max, setting.n)

    if truth:
        counts = np.arange(0, gamma)
        weights = stats.binom.pmf(counts, gamma - 1, setting.p0)
    else:
        counts = np.arange(gamma, s + 1)
        weights = stats.binom.pmf(counts - gamma, s - gamma, setting.p1)

    total = np.zeros_like(x, dtype=float)
    for count, weight in zip(counts, weights):
        if weight == 0.0:
            continue
        probs = np.concatenate([
            np.broadcast_to(q_positive, (count,) + x.shape),
            np.broadcast_to(q_nonpositive, (s - count,) + x.shape),
        ])
        total = total + weight * np.asarray(poisson_binomial_tail(probs, gamma))
    return total


def lfc_cdf(setting: SimulationSetting, t: np.ndarray, truth: bool) -> np.ndarray:
    """P(p_LFC <= t) for one endpoint class."""
    t = np.atleast_1d(check_probability(t, "t"))
    k = setting.replicability.k
    with np.errstate(divide="ignore"):
        x = -np.expm1(np.log1p(-t) / k) if k > 1 else t
    x = np.where(t >= 1.0, 1.0, x)
    return _order_statistic_cdf(setting, x, truth)


def rand_cdf(setting: SimulationSetting, t: np.ndarray, truth: bool) -> np.ndarray:
    """P(p_rand <= t) = t * (1 - F(c)) + F(t * c) with F the LFC p-value CDF."""
    t = np.atleast_1d(check_probability(t, "t"))
    c = threshold_c(setting.replicability)
    at_c = lfc_cdf(setting, np.array([c]), truth)[0]
    return t * (1.0 - at_c) + lfc_cdf(setting, t * c, truth)


def mixture_cdf(setting: SimulationSetting, kind: PValueKind, t: Sequence[float]) -> np.ndarray:
    """CDF of a randomly chosen endpoint's p-value, mixing nulls and alternatives by pi0."""
    _require_oracle_support(setting, kind)
    cdf = lfc_cdf if PValueKind(kind) is PValueKind.LFC else rand_cdf
    t = np.asarray(t, dtype=float)
    null_part = cdf(setting, t, truth=True) if setting.pi0 > 0 else 0.0
    alt_part = cdf(setting, t, truth=False) if setting.pi0 < 1 else 0.0
    return setting.pi0 * null_part + (1.0 - setting.pi0) * alt_part


def _require_oracle_support(setting: SimulationSetting, kind: PValueKind) -> None:
    if setting.model is not MarginalModelKind.Z_KNOWN_UNIT_VARIANCE:
        raise UnsupportedModelError("the expectation oracle supports the Z model only")
    if PValueKind(kind) not in (PValueKind.LFC, PValueKind.RAND):
        raise ConfigError(f"no oracle for p-value kind {PValueKind(kind).value}")


def expectation_oracle(setting: SimulationSetting, pvalue_kind: PValueKind) -> float:
    """
    Expected Schweder-Spjotvoll estimate at the setting's lambda.

    E[pi0_hat] = (1 - P(p <= lambda)) / (1 - lambda), where P(p <= lambda) is
    the pi0-mixture of the exact null and alternative endpoint CDFs.
    """
    below = float(mixture_cdf(setting, pvalue_kind, [setting.lambda_])[0])
    value = (1.0 - below) / (1.0 - setting.lambda_)
    logger.debug("Oracle %s gamma=%d pi0=%s mu=(%s, %s): %.8f", PValueKind(pvalue_kind).value,
                 setting.gamma, setting.pi0, setting.mu_min, setting.mu_max, value)
    return value


def oracle_lambda_curve(
    setting: SimulationSetting,
    pvalue_kind: PValueKind,
    lambdas: Sequence[float],
) -> CurveSeries:
    """Oracle expectation of the estimator over a sweep of tuning parameters."""
    values = [expectation_oracle(setting.with_updates(lambda_=float(lam)), pvalue_kind)
              for lam in lambdas]
    return CurveSeries(
        kind=f"oracle_{PValueKind(pvalue_kind).value}",
        x=tuple(float(lam) for lam in lambdas),
        values=tuple(values),
    )
