"""Unit tests for exact CDFs, validity conditions, stochastic orders and DKW bands."""

import math

import numpy as np
import pytest

from src.errors import ConfigError, DomainError, PreconditionError
from src.models.pvalues import PValueKind, ReplicabilityConfig
from src.models.validity import CdfCurve, OrderCheckReport
from src.replicability import threshold_c
from src.validity import (
    check_hazard_rate_order,
    check_order_statistic_hazard_order,
    check_stochastic_sandwich,
    check_validity_condition,
    dkw_band_check,
    dkw_epsilon,
    exact_lfc_cdf,
    exact_rand_cdf,
    per_study_success,
    sample_endpoint_pvalues,
    sample_lfc_configuration,
)

N = 50
GRID = np.linspace(0.0, 1.0, 201)
INTERIOR = slice(1, -1)


# Exact CDFs


def test_lfc_configuration_gives_uniform(config_10_6, lfc_column):
    lfc = exact_lfc_cdf(lfc_column, config_10_6, N, GRID)
    rand = exact_rand_cdf(lfc_column, config_10_6, N, GRID)
    assert lfc.label == "lfc" and rand.label == "rand"
    assert np.allclose(lfc.values, GRID, atol=1e-10)
    assert np.allclose(rand.values, GRID, atol=1e-10)


def test_very_negative_effects_give_degenerate_null(config_10_6):
    curve = exact_lfc_cdf([-40.0] * 10, config_10_6, N, GRID)
    assert curve.values[:-1].max() < 1e-12
    assert curve.values[-1] == 1.0


def test_null_column_curves(config_10_6, null_column):
    lfc = exact_lfc_cdf(null_column, config_10_6, N, GRID)
    rand = exact_rand_cdf(null_column, config_10_6, N, GRID)
    assert np.all(lfc.values[INTERIOR] < GRID[INTERIOR])
    assert np.all(lfc.values <= rand.values + 1e-12)
    assert np.all(rand.values <= GRID + 1e-12)


def test_alternative_column_curves(config_10_6, alternative_column):
    lfc = exact_lfc_cdf(alternative_column, config_10_6, N, GRID)
    rand = exact_rand_cdf(alternative_column, config_10_6, N, GRID)
    assert np.all(rand.values <= lfc.values + 1e-12)
    # strong effects: F_rand starts below the identity and crosses it between 0.01 and 0.02
    # GRID[2] = 0.01, GRID[4] = 0.02
    assert rand.values[2] == pytest.approx(0.00456, abs=1e-4)
    assert rand.values[2] < GRID[2]
    assert np.all(rand.values[4:] >= GRID[4:] - 1e-12)


def test_cdf_curve_rejects_decreasing_values():
    curve = CdfCurve(grid=[0.5, 0.0, 1.0], values=[0.4, 0.0, 1.0], label="shuffled")
    assert curve.grid.shape == (3,)
    with pytest.raises(DomainError):
        CdfCurve(grid=[0.0, 0.5, 1.0], values=[0.0, 0.6, 0.5], label="bad")
    with pytest.raises(DomainError):
        CdfCurve(grid=[0.0, 0.5], values=[0.0], label="short")


def test_per_study_success_edges():
    probs = per_study_success(np.array([np.inf, -np.inf, 0.0]), N, np.array([0.0, 0.3, 1.0]))
    assert np.allclose(probs[0], [1.0, 1.0, 1.0])
    assert np.allclose(probs[1], [0.0, 0.0, 1.0])
    assert np.allclose(probs[2], [0.0, 0.3, 1.0])


def test_exact_cdf_argument_checks(config_10_6, null_column):
    with pytest.raises(ConfigError):
        exact_lfc_cdf(null_column[:-1], config_10_6, N, GRID)
    with pytest.raises(DomainError):
        exact_lfc_cdf(null_column, config_10_6, N, [0.5, 1.2])
    with pytest.raises(DomainError):
        exact_rand_cdf(null_column, config_10_6, 0, GRID)


# Validity condition


def _z_grid(config):
    return np.linspace(0.0, threshold_c(config), 101)


def test_validity_condition_equality_at_lfc(config_10_6, lfc_column):
    report = check_validity_condition(lfc_column, config_10_6, N, _z_grid(config_10_6))
    assert report.holds
    assert report.max_violation < 1e-10


def test_validity_condition_holds_on_null_columns(config_10_6, null_column):
    assert check_validity_condition(null_column, config_10_6, N, _z_grid(config_10_6)).holds
    config = ReplicabilityConfig(s=10, gamma=2)
    column = [0.0] * 9 + [-3.0]
    assert check_validity_condition(column, config, N, _z_grid(config)).holds


def test_validity_condition_preconditions(config_10_6, alternative_column, null_column):
    with pytest.raises(PreconditionError):
        check_validity_condition(alternative_column, config_10_6, N, _z_grid(config_10_6))
    with pytest.raises(DomainError):
        check_validity_condition(null_column, config_10_6, N, [0.5, 0.99])


# Stochastic orders


def test_hazard_rate_order():
    grid = np.linspace(-1.5, 1.5, 301)
    assert check_hazard_rate_order(0.0, 0.0, 1 / N, grid).holds
    assert check_hazard_rate_order(-1.0, 0.0, 1 / N, grid).holds
    reversed_order = check_hazard_rate_order(1.0, 0.0, 1 / N, grid)
    assert not reversed_order.holds
    assert reversed_order.max_violation > 0
    assert reversed_order.witness is not None
    with pytest.raises(DomainError):
        check_hazard_rate_order(0.0, 1.0, 0.0, grid)


def test_stochastic_sandwich(config_10_6, lfc_column, null_column):
    at_lfc = check_stochastic_sandwich(lfc_column, config_10_6, N, GRID)
    assert at_lfc.holds and at_lfc.regime == "null"
    null = check_stochastic_sandwich(null_column, config_10_6, N, GRID)
    assert null.holds and null.regime == "null"
    assert null.holds_from == 0.0
    assert set(null.legs) == {"lfc_below_rand", "rand_below_uniform"}
    assert all(leg.holds for leg in null.legs.values())


def test_stochastic_sandwich_alternative(config_10_6, alternative_column):
    report = check_stochastic_sandwich(alternative_column, config_10_6, N, GRID)
    assert report.regime == "alternative"
    assert report.holds
    assert report.legs["rand_below_lfc"].holds

    uniform = report.legs["uniform_below_rand"]
    assert not uniform.holds
    assert uniform.max_violation == pytest.approx(0.0054, abs=5e-4)
    assert 0.0 < uniform.witness < 0.02
    assert 0.01 < uniform.holds_from <= 0.02


def test_holds_from_tracks_the_last_violation():
    grid = np.array([0.0, 0.25, 0.5, 0.75, 1.0])
    report = OrderCheckReport.from_violations(grid, [0.1, -1.0, 0.2, 0.0, 0.0])
    assert not report.holds
    assert report.witness == 0.5
    assert report.holds_from == 0.75
    assert OrderCheckReport.from_violations(grid, [0.0] * 4 + [1.0]).holds_from is None
    assert OrderCheckReport.from_violations(grid, [-1.0] * 5).holds_from == 0.0


def test_order_statistic_hazard_order():
    grid = np.linspace(0.01, 0.99, 99)
    assert check_order_statistic_hazard_order(4, 4, [0.0] * 4, N, grid).holds
    assert check_order_statistic_hazard_order(3, 2, [-1.0, -1.0, 0.0], N, grid).holds
    assert not check_order_statistic_hazard_order(2, 1, [2.0, 2.0], N, grid).holds
    with pytest.raises(ConfigError):
        check_order_statistic_hazard_order(3, 4, [0.0] * 3, N, grid)
    with pytest.raises(DomainError):
        check_order_statistic_hazard_order(3, 2, [0.0] * 3, N, [0.0, 0.5])


# Monte Carlo cross-checks


def test_dkw_epsilon():
    assert dkw_epsilon(1000, 0.999) == pytest.approx(math.sqrt(math.log(2000) / 2000))
    with pytest.raises(DomainError):
        dkw_epsilon(0)
    with pytest.raises(DomainError):
        dkw_epsilon(10, 1.0)


def test_dkw_band_detects_wrong_cdf(rng):
    samples = rng.random(5000)
    assert dkw_band_check(samples, lambda x: x).holds
    assert not dkw_band_check(samples, lambda x: x ** 2).holds


def test_lfc_configuration_samples_are_uniform(rng, config_10_6):
    for kind in (PValueKind.LFC, PValueKind.RAND):
        samples = sample_lfc_configuration(config_10_6, 20_000, rng, kind)
        assert dkw_band_check(samples, lambda x: x).holds


@pytest.mark.parametrize("kind,exact", [
    (PValueKind.LFC, exact_lfc_cdf),
    (PValueKind.RAND, exact_rand_cdf),
])
def test_samples_match_exact_cdf(rng, config_10_6, null_column, kind, exact):
    samples = sample_endpoint_pvalues(null_column, config_10_6, N, 20_000, rng, kind)
    report = dkw_band_check(samples, lambda x: exact(null_column, config_10_6, N, x).values)
    assert report.holds


def test_infinite_effects_in_sampler(rng, config_10_6, lfc_column):
    samples = sample_endpoint_pvalues(lfc_column, config_10_6, N, 2000, rng)
    assert samples.shape == (2000,)
    assert dkw_band_check(samples, lambda x: x).holds
    with pytest.raises(ConfigError):
        sample_endpoint_pvalues(lfc_column[:-1], config_10_6, N, 10, rng)
