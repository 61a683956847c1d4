"""Unit tests for selection and the replicability analysis pipeline."""

import numpy as np
import pytest

from src.analysis import (
    analyze,
    bh_select,
    first_randomization,
    randomized_estimates,
    selection_ecdf_curves,
    synthesize_zscore_matrix,
)
from src.errors import ConfigError, DataError, DomainError
from src.models.analysis import AnalysisReport, ZScoreMatrix
from src.models.pvalues import PValueKind
from src.models.simulation import SimulationSetting
from src.pi0 import schweder_spjotvoll
from src.simulation import expectation_oracle


def _constant_matrix(replication_z, markers=20, studies=7):
    z = np.full((studies + 1, markers), float(replication_z))
    z[0] = 10.0
    return ZScoreMatrix(
        marker_ids=tuple(f"m{j}" for j in range(markers)),
        study_ids=("primary",) + tuple(f"s{i}" for i in range(studies)),
        z=z,
    )


def test_bh_select():
    assert bh_select([0.01, 0.02, 0.04, 0.9], 0.05) == {0, 1}
    assert bh_select([1.0, 1.0, 1.0], 0.1) == set()
    assert bh_select([0.04], 0.05) == {0}
    # step-up: a passing larger p-value pulls smaller ones in
    assert bh_select([0.03, 0.031, 0.032], 0.05) == {0, 1, 2}
    with pytest.raises(DomainError):
        bh_select([0.1], 1.0)


def test_strong_replication_signal():
    report = analyze(_constant_matrix(10.0), "primary", q=0.2, gamma=2, lambda_=0.5,
                     rand_repeats=10, seed=1)
    assert report.selected_count == 20
    assert report.pi0_lfc == 0.0
    assert report.pi0_rand_mean == 0.0
    assert report.studies == tuple(f"s{i}" for i in range(7))


def test_zero_replication_signal():
    report = analyze(_constant_matrix(0.0), "primary", q=0.2, gamma=2, lambda_=0.5,
                     rand_repeats=10, seed=1)
    assert report.threshold_c == pytest.approx(0.984375)
    assert report.pi0_lfc == 2.0
    # every LFC p-value ties with c and randomizes to 1
    assert report.pi0_rand_mean == 2.0
    assert report.pi0_rand_std == 0.0


def test_single_repeat_is_reproducible():
    matrix, _ = synthesize_zscore_matrix(SimulationSetting(m=50, pi0=0.6, seed=11))
    first = analyze(matrix, "primary", 0.2, 3, 0.5, rand_repeats=1, seed=9)
    second = analyze(matrix, "primary", 0.2, 3, 0.5, rand_repeats=1, seed=9)
    assert first == second
    assert first.pi0_rand_std == 0.0


def test_randomized_estimates_use_fixed_chunks():
    lfc = np.array([0.1, 0.5, 0.99, 0.995, 0.999])
    c = 0.96875
    many = randomized_estimates(lfc, c, 0.5, 2500, seed=4)
    assert many.shape == (2500,)
    assert randomized_estimates(lfc, c, 0.5, 1, seed=4)[0] == many[0]
    assert np.array_equal(randomized_estimates(lfc, c, 0.5, 2500, seed=4), many)
    # 0.5 / c exceeds lambda, so every repeat counts at least one endpoint
    assert np.all(many >= 1 / (5 * 0.5))


def test_first_randomization_matches_first_repeat():
    lfc = np.array([0.1, 0.5, 0.96875, 0.99, 0.995, 0.999])
    c = 0.96875
    rand = first_randomization(lfc, c, seed=4)
    assert np.allclose(rand[:2], lfc[:2] / c)
    assert rand[2] == 1.0
    assert np.all((rand[3:] > 0) & (rand[3:] < 1))
    first = randomized_estimates(lfc, c, 0.5, 2500, seed=4)[0]
    assert schweder_spjotvoll(rand, 0.5).value == first


def test_selection_ecdf_curves():
    matrix, _ = synthesize_zscore_matrix(SimulationSetting(m=60, s=5, gamma=2, pi0=0.6, seed=3))
    report = analyze(matrix, "primary", 0.2, 2, 0.5, rand_repeats=50, seed=8)
    assert len(report.lfc_pvalues) == report.selected_count
    assert "lfc_pvalues" not in report.to_dict()

    grid = np.linspace(0.0, 1.0, 11)
    lfc_curve, rand_curve = selection_ecdf_curves(report, grid)
    assert (lfc_curve.kind, rand_curve.kind) == ("lfc", "rand")
    assert lfc_curve.x == tuple(grid.tolist())
    lfc = np.asarray(report.lfc_pvalues)
    assert lfc_curve.values[5] == pytest.approx(np.mean(lfc <= 0.5))
    assert lfc_curve.values[-1] == rand_curve.values[-1] == 1.0
    assert np.all(np.diff(rand_curve.values) >= 0)
    assert selection_ecdf_curves(report, grid) == [lfc_curve, rand_curve]

    empty = AnalysisReport(q=0.2, gamma=2, selected_count=0, pi0_lfc=0.0, pi0_rand_mean=0.0,
                           pi0_rand_std=0.0, rand_repeats=1)
    with pytest.raises(DataError):
        selection_ecdf_curves(empty, grid)


def test_analysis_errors():
    matrix = _constant_matrix(1.0)
    with pytest.raises(DataError):
        analyze(matrix, "missing", 0.2, 2, 0.5, 10, 1)
    with pytest.raises(ConfigError):
        analyze(matrix, "primary", 0.2, 1, 0.5, 10, 1)
    with pytest.raises(ConfigError):
        analyze(matrix, "primary", 0.2, 8, 0.5, 10, 1)
    with pytest.raises(ConfigError):
        analyze(matrix, "primary", 0.2, 2, 0.5, 0, 1)
    no_signal = ZScoreMatrix(matrix.marker_ids, matrix.study_ids, np.zeros_like(matrix.z))
    with pytest.raises(DataError):
        analyze(no_signal, "primary", 0.2, 2, 0.5, 10, 1)


def test_synthetic_matrix_matches_oracle():
    setting = SimulationSetting(m=1000, s=10, gamma=6, pi0=0.7, mu_min=-1.0, mu_max=4.0,
                                n=50, seed=21)
    matrix, effects = synthesize_zscore_matrix(setting)
    assert matrix.z.shape == (11, 1000)
    assert effects.truth.sum() == 700

    report = analyze(matrix, "primary", 0.2, setting.gamma, setting.lambda_,
                     rand_repeats=500, seed=5)
    assert report.selected_count == 1000
    # a single realization: the estimate has standard deviation at most 1 / sqrt(m)
    bound = 4.0 / np.sqrt(setting.m)
    assert abs(report.pi0_lfc - expectation_oracle(setting, PValueKind.LFC)) < bound
    assert abs(report.pi0_rand_mean - expectation_oracle(setting, PValueKind.RAND)) < bound
