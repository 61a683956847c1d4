"""Replicability analysis of z-score data."""

from .pipeline import (
    analyze,
    first_randomization,
    one_sided_pvalues,
    randomized_estimates,
    selection_ecdf_curves,
    synthesize_zscore_matrix,
)
from .selection import bh_select

__all__ = [
    "analyze",
    "bh_select",
    "first_randomization",
    "one_sided_pvalues",
    "randomized_estimates",
    "selection_ecdf_curves",
    "synthesize_zscore_matrix",
]
