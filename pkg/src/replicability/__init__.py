"""Partial-conjunction replicability p-values."""

from .combiners import fisher_pc_pvalue, stouffer_pc_pvalue
from .core import (
    conditional_lfc_cdf,
    evaluate_endpoint,
    gamma_order_statistic,
    partial_conjunction_lfc_pvalue,
    partial_conjunction_lfc_pvalues,
    randomize,
    reject,
    threshold_c,
)

__all__ = [
    "fisher_pc_pvalue",
    "stouffer_pc_pvalue",
    "conditional_lfc_cdf",
    "evaluate_endpoint",
    "gamma_order_statistic",
    "partial_conjunction_lfc_pvalue",
    "partial_conjunction_lfc_pvalues",
    "randomize",
    "reject",
    "threshold_c",
]
