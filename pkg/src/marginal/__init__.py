"""Per-study marginal tests."""

from .models import (
    SIGN_THRESHOLD,
    draw_lfc_pvalues,
    evaluate_study,
    marginal_lfc_pvalue,
    marginal_randomized_pvalue,
    marginal_statistic,
)

__all__ = [
    "SIGN_THRESHOLD",
    "draw_lfc_pvalues",
    "evaluate_study",
    "marginal_lfc_pvalue",
    "marginal_randomized_pvalue",
    "marginal_statistic",
]
