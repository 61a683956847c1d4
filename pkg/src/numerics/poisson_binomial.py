"""Exact Poisson binomial distribution (sum of independent, non-identical Bernoullis)."""

from typing import Optional, Union

import numpy as np

from ..errors import DomainError
from .validation import ArrayLike, check_probability, unwrap


def poisson_binomial_pmf(
    probabilities: ArrayLike,
    complements: Optional[ArrayLike] = None,
) -> np.ndarray:
    """
    Probability mass function of the number of successes.

    The success probabilities run along axis 0; any trailing axes are treated
    as independent problems (a grid of thresholds, a batch of endpoints).

    Args:
        probabilities: Array of shape (s, ...) with entries in [0, 1]
        complements: Optional failure probabilities 1 - p of the same shape,
            for callers that can compute them without cancellation

    Returns:
        Array of shape (s + 1, ...) whose entry k is P(exactly k successes)
    """
    probs = check_probability(probabilities, "probabilities")
    if probs.ndim == 0:
        probs = probs.reshape(1)
    if complements is None:
        fails = 1.0 - probs
    else:
        fails = check_probability(complements, "complements").reshape(probs.shape)

    # Coefficients of the generating function prod_i (q_i + p_i x)
    pmf = np.zeros((1,) + probs.shape[1:])
    pmf[0] = 1.0
    for p, q in zip(probs, fails):
        step = np.zeros((pmf.shape[0] + 1,) + probs.shape[1:])
        step[:-1] = pmf * q
        step[1:] += pmf * p
        pmf = step
    return pmf


def poisson_binomial_tail(probabilities: ArrayLike, k: int) -> Union[float, np.ndarray]:
    """P(at least ``k`` successes) for probabilities of shape (s, ...)."""
    probs = check_probability(probabilities, "probabilities")
    s = probs.shape[0] if probs.ndim else 1
    if k < 0 or k > s:
        raise DomainError(f"k must lie in [0, {s}], got {k}")
    if k == 0:
        return unwrap(np.ones(probs.shape[1:]))
    pmf = poisson_binomial_pmf(probs)
    tail = pmf[k:].sum(axis=0)
    return unwrap(np.clip(tail, 0.0, 1.0))
