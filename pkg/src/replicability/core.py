"""LFC-based and randomized partial-conjunction p-values."""

from typing import Union

import numpy as np

from ..errors import ConfigError, DomainError
from ..models.pvalues import PValueRecord, ReplicabilityConfig
from ..numerics.distributions import beta_k1_cdf
from ..numerics.validation import ArrayLike, check_probability, unwrap

Real = Union[float, np.ndarray]


def threshold_c(config: ReplicabilityConfig) -> float:
    """
    Probability that the estimate lands in the alternative under the LFC.

    Equals 1 - (1 - d)**(s - gamma + 1): gamma - 1 studies sit at +inf and the
    remaining k studies each show a positive estimate with probability d.
    """
    # Same arithmetic as the LFC p-value so that p_(gamma) = d maps exactly to c
    return float(1.0 - beta_k1_cdf(1.0 - config.d, config.k))


def _per_study_matrix(per_study: ArrayLike, s: int) -> np.ndarray:
    values = check_probability(per_study, "per_study")
    if values.ndim == 0 or values.shape[0] != s:
        got = values.shape[0] if values.ndim else 1
        raise ConfigError(f"expected {s} per-study p-values, got {got}")
    return values


def gamma_order_statistic(per_study: ArrayLike, config: ReplicabilityConfig) -> Real:
    """gamma-th smallest per-study p-value along axis 0."""
    values = _per_study_matrix(per_study, config.s)
    idx = config.gamma - 1
    return unwrap(np.partition(values, idx, axis=0)[idx])


def partial_conjunction_lfc_pvalue(per_study: ArrayLike, config: ReplicabilityConfig) -> Real:
    """
    LFC p-value of the partial-conjunction null.

    With p_(gamma) the gamma-th smallest per-study p-value this is the Beta(k, 1)
    survival 1 - (1 - p_(gamma))**k, k = s - gamma + 1. A 2-d input of shape
    (s, m) yields one p-value per column.
    """
    p_gamma = np.asarray(gamma_order_statistic(per_study, config))
    return unwrap(1.0 - np.asarray(beta_k1_cdf(1.0 - p_gamma, config.k)))


def partial_conjunction_lfc_pvalues(matrix: ArrayLike, config: ReplicabilityConfig) -> np.ndarray:
    """Column-wise LFC p-values of an s x m matrix of per-study p-values."""
    values = np.asarray(matrix, dtype=float)
    if values.ndim != 2:
        raise ConfigError("expected an s x m matrix of per-study p-values")
    return np.asarray(partial_conjunction_lfc_pvalue(values, config))


def conditional_lfc_cdf(t: ArrayLike, c: float) -> Real:
    """CDF of the LFC p-value given that the estimate lies in the alternative: min(t/c, 1)."""
    if not 0.0 < c <= 1.0:
        raise DomainError(f"c must lie in (0, 1], got {c}")
    t = check_probability(t, "t")
    return unwrap(np.minimum(t / c, 1.0))


def randomize(lfc: ArrayLike, c: float, u: ArrayLike) -> Real:
    """
    Randomized p-value from an LFC p-value.

    lfc < c gives lfc / c, lfc > c gives the independent uniform u, and the
    tie lfc == c gives 1.
    """
    if not 0.0 < c < 1.0:
        raise DomainError(f"c must lie in (0, 1), got {c}")
    lfc = check_probability(lfc, "lfc")
    u = check_probability(u, "u")
    result = np.where(lfc < c, lfc / c, u)
    result = np.where(lfc == c, 1.0, result)
    return unwrap(result)


def evaluate_endpoint(per_study: ArrayLike, config: ReplicabilityConfig, u: float) -> PValueRecord:
    """All replicability p-values of one endpoint."""
    values = _per_study_matrix(per_study, config.s)
    if values.ndim != 1:
        raise ConfigError("evaluate_endpoint takes a single endpoint")
    p_gamma = float(gamma_order_statistic(values, config))
    lfc = float(partial_conjunction_lfc_pvalue(values, config))
    randomized = float(randomize(lfc, threshold_c(config), u))
    return PValueRecord(
        per_study=tuple(float(v) for v in values),
        lfc=lfc,
        randomized=randomized,
        uniform_used=float(u),
        in_alternative_estimate=p_gamma < config.d,
    )


def reject(lfc: ArrayLike, alpha: float) -> Union[bool, np.ndarray]:
    """Level-alpha decision: reject when lfc < alpha."""
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    decision = check_probability(lfc, "lfc") < alpha
    if decision.ndim == 0:
        return bool(decision)
    return decision
