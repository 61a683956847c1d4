"""Distribution primitives: normal, Student t, Beta(k, 1) and chi-square."""

from typing import Union

import numpy as np
from scipy import special

from ..errors import DomainError
from .validation import (
    ArrayLike,
    as_float_array,
    check_finite,
    check_positive_int,
    check_probability,
    unwrap,
)

Real = Union[float, np.ndarray]


def std_normal_cdf(x: ArrayLike) -> Real:
    """Standard normal CDF Φ(x); x must be finite."""
    arr = check_finite(x, "x")
    return unwrap(special.ndtr(arr))


def std_normal_sf(x: ArrayLike) -> Real:
    """Standard normal survival 1 - Φ(x), accurate in the upper tail."""
    arr = check_finite(x, "x")
    return unwrap(special.ndtr(-arr))


def std_normal_log_sf(x: ArrayLike) -> Real:
    """log(1 - Φ(x)), finite deep into the upper tail."""
    arr = check_finite(x, "x")
    return unwrap(special.log_ndtr(-arr))


def std_normal_quantile(p: ArrayLike) -> Real:
    """Inverse of Φ on the open interval (0, 1)."""
    arr = check_probability(p, "p", open_low=True, open_high=True)
    return unwrap(special.ndtri(arr))


def student_t_cdf(x: ArrayLike, df: int) -> Real:
    """
    Central Student t CDF with ``df`` degrees of freedom.

    Computed through the regularized incomplete beta function (scipy ``stdtr``).
    """
    df = check_positive_int(df, "df")
    arr = as_float_array(x, "x")
    return unwrap(special.stdtr(df, arr))


def beta_k1_cdf(t: ArrayLike, k: int) -> Real:
    """CDF of Beta(k, 1): t**k on [0, 1]."""
    k = check_positive_int(k, "k")
    arr = check_probability(t, "t")
    return unwrap(np.power(arr, k))


def beta_k1_quantile(p: ArrayLike, k: int) -> Real:
    """Quantile of Beta(k, 1): p**(1/k) on [0, 1]."""
    k = check_positive_int(k, "k")
    arr = check_probability(p, "p")
    return unwrap(np.power(arr, 1.0 / k))


def chi_square_cdf(x: ArrayLike, df: int) -> Real:
    """Chi-square CDF (regularized lower incomplete gamma)."""
    df = check_positive_int(df, "df")
    arr = as_float_array(x, "x")
    if np.any(arr < 0):
        raise DomainError("chi-square argument must be non-negative")
    return unwrap(special.gammainc(df / 2.0, arr / 2.0))


def chi_square_sf(x: ArrayLike, df: int) -> Real:
    """Chi-square survival function, accurate in the upper tail."""
    df = check_positive_int(df, "df")
    arr = as_float_array(x, "x")
    if np.any(arr < 0):
        raise DomainError("chi-square argument must be non-negative")
    return unwrap(special.chdtrc(df, arr))


def chi_square_quantile(p: ArrayLike, df: int) -> Real:
    """Chi-square quantile on the open interval (0, 1)."""
    df = check_positive_int(df, "df")
    arr = check_probability(p, "p", open_low=True, open_high=True)
    # chdtri inverts the survival function
    return unwrap(special.chdtri(df, 1.0 - arr))
