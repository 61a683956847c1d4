"""Unit tests for per-study statistics and p-values."""

import math

import numpy as np
import pytest

from src.errors import DegenerateSampleError, DomainError
from src.marginal import (
    draw_lfc_pvalues,
    evaluate_study,
    marginal_lfc_pvalue,
    marginal_randomized_pvalue,
    marginal_statistic,
)
from src.models.pvalues import MarginalModelKind, StudySample

Z = MarginalModelKind.Z_KNOWN_UNIT_VARIANCE
T = MarginalModelKind.T_UNKNOWN_VARIANCE


def test_statistic_z_is_mean():
    assert marginal_statistic([1.0, -1.0], Z) == 0.0
    assert marginal_statistic(StudySample((2.0, 4.0)), Z) == 3.0


def test_statistic_t():
    assert marginal_statistic([0.0, 1.0, 2.0], T) == pytest.approx(math.sqrt(3.0))
    with pytest.raises(DegenerateSampleError):
        marginal_statistic([1.0, 1.0, 1.0], T)


def test_statistic_is_vectorised_over_last_axis():
    data = np.array([[1.0, 3.0], [-2.0, 0.0]])
    assert np.allclose(marginal_statistic(data, Z), [2.0, -1.0])


def test_lfc_pvalue_values():
    assert marginal_lfc_pvalue(0.0, Z, 17) == 0.5
    assert marginal_lfc_pvalue(0.0, T, 10) == 0.5
    n = 50
    assert marginal_lfc_pvalue(1.959964 / math.sqrt(n), Z, n) == pytest.approx(0.025, abs=1e-7)


def test_lfc_pvalue_decreasing_in_statistic():
    stats = np.linspace(-3, 3, 61)
    for kind in (Z, T):
        p = marginal_lfc_pvalue(stats, kind, 12)
        steps = np.diff(p)
        assert np.all(steps <= 0)
        # saturated tails (Z kind: p == 1.0 for stat <= -2.2) are flat in floating point
        inside = (p[:-1] > 0) & (p[:-1] < 1) & (p[1:] > 0) & (p[1:] < 1)
        assert inside.sum() > 30
        assert np.all(steps[inside] < 0)


def test_randomized_pvalue():
    assert marginal_randomized_pvalue(0.3, 0.9) == pytest.approx(0.6)
    assert marginal_randomized_pvalue(0.7, 0.9) == 0.9
    assert marginal_randomized_pvalue(0.0, 0.4) == 0.0
    assert marginal_randomized_pvalue(0.5, 0.2) == 1.0
    with pytest.raises(DomainError):
        marginal_randomized_pvalue(1.2, 0.5)


def test_evaluate_study():
    result = evaluate_study([0.5, 1.5, 1.0], Z)
    assert result.statistic == pytest.approx(1.0)
    assert result.lfc_pvalue == pytest.approx(marginal_lfc_pvalue(1.0, Z, 3))
    assert result.estimator_positive is True


def test_study_sample_rejects_empty_and_non_finite():
    with pytest.raises(DomainError):
        StudySample(())
    with pytest.raises(DomainError):
        StudySample((1.0, float("inf")))


def test_draw_lfc_pvalues_null_is_uniform(rng):
    theta = np.zeros((4, 5000))
    for observations in (False, True):
        p = draw_lfc_pvalues(rng, theta, 8, Z, observations)
        assert p.shape == theta.shape
        assert abs(p.mean() - 0.5) < 0.01
    p = draw_lfc_pvalues(rng, theta, 8, T)
    assert abs(p.mean() - 0.5) < 0.01
