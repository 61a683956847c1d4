"""Dvoretzky-Kiefer-Wolfowitz confidence bands for empirical CDFs."""

from typing import Callable

import numpy as np

from ..errors import DomainError
from ..models.validity import OrderCheckReport
from ..numerics.validation import ArrayLike, as_float_array


def dkw_epsilon(draws: int, confidence: float = 0.999) -> float:
    """Half-width of the DKW band: sqrt(log(2 / (1 - confidence)) / (2 * draws))."""
    if draws < 1:
        raise DomainError(f"draws must be positive, got {draws}")
    if not 0.0 < confidence < 1.0:
        raise DomainError(f"confidence must lie in (0, 1), got {confidence}")
    return float(np.sqrt(np.log(2.0 / (1.0 - confidence)) / (2.0 * draws)))


def ks_distance(samples: ArrayLike, cdf: Callable[[np.ndarray], np.ndarray]) -> tuple:
    """Kolmogorov distance sup |F_n - F| and the sample point where it is attained."""
    x = np.sort(as_float_array(samples, "samples").ravel())
    if x.size == 0:
        raise DomainError("samples are empty")
    m = x.size
    f = np.asarray(cdf(x), dtype=float)
    # F_n jumps at each sample: compare both sides of every step
    above = np.arange(1, m + 1) / m - f
    below = f - np.arange(0, m) / m
    gaps = np.maximum(above, below)
    worst = int(np.argmax(gaps))
    return float(gaps[worst]), float(x[worst])


def dkw_band_check(
    samples: ArrayLike,
    cdf: Callable[[np.ndarray], np.ndarray],
    confidence: float = 0.999,
) -> OrderCheckReport:
    """
    Check that the ECDF of ``samples`` lies inside the DKW band around ``cdf``.

    ``max_violation`` is the excess of the Kolmogorov distance over the band
    half-width (0 when inside).
    """
    distance, point = ks_distance(samples, cdf)
    epsilon = dkw_epsilon(np.size(samples), confidence)
    excess = distance - epsilon
    return OrderCheckReport.from_violations(np.array([point]), np.array([excess]), tolerance=0.0)
