"""Special functions and distribution primitives."""

from .distributions import (
    beta_k1_cdf,
    beta_k1_quantile,
    chi_square_cdf,
    chi_square_quantile,
    chi_square_sf,
    std_normal_cdf,
    std_normal_log_sf,
    std_normal_quantile,
    std_normal_sf,
    student_t_cdf,
)
from .poisson_binomial import poisson_binomial_pmf, poisson_binomial_tail

__all__ = [
    "beta_k1_cdf",
    "beta_k1_quantile",
    "chi_square_cdf",
    "chi_square_quantile",
    "chi_square_sf",
    "std_normal_cdf",
    "std_normal_log_sf",
    "std_normal_quantile",
    "std_normal_sf",
    "student_t_cdf",
    "poisson_binomial_pmf",
    "poisson_binomial_tail",
]
