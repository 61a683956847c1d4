"""Numeric verification of validity and stochastic-order properties."""

from .dkw import dkw_band_check, dkw_epsilon, ks_distance
from .exact import check_validity_condition, exact_lfc_cdf, exact_rand_cdf, per_study_success
from .orders import (
    check_hazard_rate_order,
    check_order_statistic_hazard_order,
    check_stochastic_sandwich,
)
from .sampling import sample_endpoint_pvalues, sample_lfc_configuration

__all__ = [
    "dkw_band_check",
    "dkw_epsilon",
    "ks_distance",
    "check_validity_condition",
    "exact_lfc_cdf",
    "exact_rand_cdf",
    "per_study_success",
    "check_hazard_rate_order",
    "check_order_statistic_hazard_order",
    "check_stochastic_sandwich",
    "sample_endpoint_pvalues",
    "sample_lfc_configuration",
]
