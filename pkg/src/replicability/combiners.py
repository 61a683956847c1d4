"""Stouffer and Fisher partial-conjunction p-values over the s - gamma + 1 largest p-values."""

from typing import Union

import numpy as np

from ..errors import ConfigError, DomainError
from ..numerics.distributions import chi_square_sf, std_normal_quantile, std_normal_sf
from ..numerics.validation import ArrayLike, check_probability

Real = Union[float, np.ndarray]


def _largest(per_study: ArrayLike, gamma: int) -> np.ndarray:
    """Order statistics gamma..s along axis 0."""
    values = check_probability(per_study, "per_study")
    if values.ndim == 0:
        values = values.reshape(1)
    s = values.shape[0]
    if not 1 <= gamma <= s:
        raise ConfigError(f"gamma must lie in [1, {s}], got {gamma}")
    return np.sort(values, axis=0)[gamma - 1:]


def stouffer_pc_pvalue(per_study: ArrayLike, gamma: int) -> Real:
    """
    Stouffer-type partial-conjunction p-value.

    T = k**-0.5 * sum of Phi^-1(1 - p_(i)) for i = gamma..s, returned as 1 - Phi(T).
    The combined order statistics must lie strictly inside (0, 1).
    """
    used = _largest(per_study, gamma)
    if np.any((used <= 0.0) | (used >= 1.0)):
        raise DomainError("Stouffer combination needs p-values strictly inside (0, 1)")
    k = used.shape[0]
    statistic = -np.asarray(std_normal_quantile(used)).sum(axis=0) / np.sqrt(k)
    return std_normal_sf(statistic)


def fisher_pc_pvalue(per_study: ArrayLike, gamma: int) -> Real:
    """
    Fisher-type partial-conjunction p-value.

    T = -2 * sum of log p_(i) for i = gamma..s, referred to chi-square with 2k
    degrees of freedom.
    """
    used = _largest(per_study, gamma)
    if np.any(used <= 0.0):
        raise DomainError("Fisher combination needs strictly positive p-values")
    k = used.shape[0]
    statistic = -2.0 * np.log(used).sum(axis=0)
    return chi_square_sf(statistic, 2 * k)
