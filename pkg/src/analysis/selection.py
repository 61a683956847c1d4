"""Benjamini-Hochberg selection."""

from typing import Set

import numpy as np

from ..errors import DomainError
from ..numerics.validation import ArrayLike, check_probability


def bh_select(pvalues: ArrayLike, q: float) -> Set[int]:
    """
    Benjamini-Hochberg step-up selection at false discovery rate ``q``.

    Finds the largest k with p_(k) <= k * q / m and returns the indices of the
    k smallest p-values (empty when no such k exists).
    """
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    p = check_probability(pvalues, "pvalues").ravel()
    m = p.size
    if m == 0:
        return set()
    order = np.argsort(p, kind="stable")
    thresholds = q * np.arange(1, m + 1) / m
    passing = np.nonzero(p[order] <= thresholds)[0]
    if passing.size == 0:
        return set()
    k = int(passing[-1]) + 1
    return {int(i) for i in order[:k]}
