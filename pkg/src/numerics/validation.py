"""Argument checks shared by the numeric primitives."""

from typing import Union

import numpy as np

from ..errors import DomainError

ArrayLike = Union[float, int, np.ndarray, list, tuple]


def as_float_array(values: ArrayLike, name: str) -> np.ndarray:
    """Convert input to a float array, rejecting NaN."""
    arr = np.asarray(values, dtype=float)
    if np.any(np.isnan(arr)):
        raise DomainError(f"{name} contains NaN")
    return arr


def unwrap(result: np.ndarray) -> Union[float, np.ndarray]:
    """Return a Python float for 0-d results, the array otherwise."""
    result = np.asarray(result)
    if result.ndim == 0:
        return float(result)
    return result


def check_finite(values: ArrayLike, name: str) -> np.ndarray:
    """Reject non-finite entries."""
    arr = as_float_array(values, name)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    return arr


def check_probability(
    values: ArrayLike,
    name: str,
    open_low: bool = False,
    open_high: bool = False,
) -> np.ndarray:
    """
    Validate that all values lie in [0, 1].

    Args:
        values: Scalar or array of probabilities
        name: Argument name used in the error message
        open_low: Exclude 0 from the domain
        open_high: Exclude 1 from the domain

    Returns:
        Values as a float array
    """
    arr = as_float_array(values, name)
    low_bad = arr <= 0.0 if open_low else arr < 0.0
    high_bad = arr >= 1.0 if open_high else arr > 1.0
    if np.any(low_bad | high_bad):
        low = "(0" if open_low else "[0"
        high = "1)" if open_high else "1]"
        raise DomainError(f"{name} must lie in {low}, {high}")
    return arr


def check_positive_int(value: int, name: str) -> int:
    """Validate a positive integer parameter (degrees of freedom, exponents)."""
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")
    return int(value)
