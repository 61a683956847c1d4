"""Schweder-Spjotvoll estimation of the proportion of true null hypotheses."""

from typing import List, Optional, Sequence, Union

import numpy as np

from ..errors import DomainError
from ..models.pvalues import Pi0Estimate, PValueKind
from ..numerics.validation import ArrayLike, check_probability, unwrap


def _pvalue_vector(values: ArrayLike) -> np.ndarray:
    arr = check_probability(values, "pvalues").ravel()
    if arr.size == 0:
        raise DomainError("p-value vector is empty")
    return arr


def ecdf(values: ArrayLike, t: ArrayLike) -> Union[float, np.ndarray]:
    """Empirical CDF: fraction of values <= t (right-continuous)."""
    arr = np.sort(_pvalue_vector(values))
    t = check_probability(t, "t")
    counts = np.searchsorted(arr, t, side="right")
    return unwrap(counts / arr.size)


def schweder_spjotvoll(
    pvalues: ArrayLike,
    lambda_: float,
    kind: Optional[PValueKind] = None,
) -> Pi0Estimate:
    """
    Proportion of p-values above lambda, divided by 1 - lambda.

    The count is integral, so the value is exact up to one division. The
    estimate is not truncated at 1.
    """
    if not 0.0 <= lambda_ < 1.0:
        raise DomainError(f"lambda must lie in [0, 1), got {lambda_}")
    arr = _pvalue_vector(pvalues)
    m = int(arr.size)
    count_above = int(np.count_nonzero(arr > lambda_))
    return Pi0Estimate(
        value=count_above / (m * (1.0 - lambda_)),
        lambda_=float(lambda_),
        count_above=count_above,
        m=m,
        kind=PValueKind(kind) if kind is not None else None,
    )


def lambda_sweep(
    pvalues: ArrayLike,
    lambdas: Sequence[float],
    kind: Optional[PValueKind] = None,
) -> List[Pi0Estimate]:
    """Estimates for each tuning parameter in turn."""
    if len(lambdas) == 0:
        return []
    arr = _pvalue_vector(pvalues)
    return [schweder_spjotvoll(arr, lam, kind) for lam in lambdas]
