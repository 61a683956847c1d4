"""Selection, replicability p-values and proportion-of-nulls estimation on z-score data."""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from ..errors import ConfigError, DataError
from ..models.analysis import AnalysisReport, ZScoreMatrix
from ..models.pvalues import ReplicabilityConfig
from ..models.simulation import CurveSeries, EffectMatrix, SimulationSetting
from ..numerics import std_normal_sf
from ..pi0 import ecdf, schweder_spjotvoll
from ..replicability import partial_conjunction_lfc_pvalues, randomize, threshold_c
from ..simulation.effects import draw_effect_matrix
from ..simulation.streams import replicate_rng
from .selection import bh_select

logger = logging.getLogger(__name__)

# Randomization repeats drawn per generator; part of the determinism contract
REPEAT_CHUNK = 1000

# Mean z-score of the primary study in synthetic data; every marker is selected
PRIMARY_SIGNAL_Z = 10.0


def one_sided_pvalues(z: np.ndarray) -> np.ndarray:
    """p = 1 - Phi(z), for associations in the positive direction."""
    return np.asarray(std_normal_sf(z))


def randomized_estimates(
    lfc: np.ndarray,
    c: float,
    lambda_: float,
    repeats: int,
    seed: int,
) -> np.ndarray:
    """
    Estimates from ``repeats`` independent randomizations of fixed LFC p-values.

    Endpoints with lfc < c have the deterministic randomized value lfc / c and
    the tie lfc == c maps to 1; only the remaining endpoints draw a uniform.
    Repeats are drawn in fixed chunks so the result depends on the seed only.
    """
    m = lfc.size
    fixed = np.where(lfc == c, 1.0, lfc / c)
    random_mask = lfc > c
    fixed_above = int(np.count_nonzero((fixed > lambda_) & ~random_mask))
    n_random = int(np.count_nonzero(random_mask))

    counts = np.empty(repeats, dtype=np.int64)
    for chunk_index, start in enumerate(range(0, repeats, REPEAT_CHUNK)):
        stop = min(start + REPEAT_CHUNK, repeats)
        rng = replicate_rng(seed, chunk_index)
        uniforms = rng.random((stop - start, n_random))
        counts[start:stop] = fixed_above + np.count_nonzero(uniforms > lambda_, axis=1)
    return counts / (m * (1.0 - lambda_))


def first_randomization(lfc: np.ndarray, c: float, seed: int) -> np.ndarray:
    """
    Randomized p-values of the first repeat drawn by ``randomized_estimates``.

    The estimate from these p-values equals the first entry of
    ``randomized_estimates(lfc, c, lambda_, repeats, seed)`` for any repeats.
    """
    lfc = np.asarray(lfc, dtype=float)
    random_mask = lfc > c
    u = np.zeros_like(lfc)
    # first row of the first chunk: draws fill row-major
    u[random_mask] = replicate_rng(seed, 0).random(int(np.count_nonzero(random_mask)))
    return np.asarray(randomize(lfc, c, u))


def selection_ecdf_curves(report: AnalysisReport, grid: np.ndarray) -> List[CurveSeries]:
    """ECDFs over the selected markers of their LFC p-values and of one randomization."""
    if not report.lfc_pvalues:
        raise DataError("the report carries no LFC p-values")
    lfc = np.asarray(report.lfc_pvalues, dtype=float)
    rand = first_randomization(lfc, report.threshold_c, report.seed)
    x = tuple(np.asarray(grid, dtype=float).tolist())
    return [
        CurveSeries(kind=kind, x=x, values=tuple(np.atleast_1d(ecdf(values, grid)).tolist()))
        for kind, values in (("lfc", lfc), ("rand", rand))
    ]


def analyze(
    matrix: ZScoreMatrix,
    primary_study: str,
    q: float,
    gamma: int,
    lambda_: float,
    rand_repeats: int,
    seed: int,
) -> AnalysisReport:
    """
    Replicability analysis of markers selected in a primary study.

    Markers are selected by Benjamini-Hochberg on the primary study's one-sided
    p-values. The primary study is then dropped; replicability LFC p-values
    come from the remaining studies with d = 1/2. The randomized estimate is
    averaged over ``rand_repeats`` uniform draws with the data held fixed.
    """
    primary_row = matrix.study_index(primary_study)
    replication_rows = [i for i in range(len(matrix.study_ids)) if i != primary_row]
    s = len(replication_rows)
    if s < 2 or not 2 <= gamma <= s:
        raise ConfigError(f"gamma must lie in [2, {s}] for {s} replication studies, got {gamma}")
    if rand_repeats < 1:
        raise ConfigError(f"rand_repeats must be positive, got {rand_repeats}")
    if not 0.0 <= lambda_ < 1.0:
        raise ConfigError(f"lambda must lie in [0, 1), got {lambda_}")
    config = ReplicabilityConfig(s, gamma)

    primary_p = one_sided_pvalues(matrix.z[primary_row])
    selected = sorted(bh_select(primary_p, q))
    if not selected:
        raise DataError(f"no marker selected in study {primary_study!r} at q={q}")
    logger.info("Selected %d of %d markers at q=%s", len(selected), len(matrix.marker_ids), q)

    per_study = one_sided_pvalues(matrix.z[np.ix_(replication_rows, selected)])
    lfc = partial_conjunction_lfc_pvalues(per_study, config)
    c = threshold_c(config)
    pi0_lfc = schweder_spjotvoll(lfc, lambda_).value

    estimates = randomized_estimates(lfc, c, lambda_, rand_repeats, seed)
    values = estimates.tolist()
    mean = math.fsum(values) / rand_repeats
    if rand_repeats > 1:
        std = math.sqrt(math.fsum((v - mean) ** 2 for v in values) / (rand_repeats - 1))
    else:
        std = 0.0

    return AnalysisReport(
        q=q,
        gamma=gamma,
        selected_count=len(selected),
        pi0_lfc=pi0_lfc,
        pi0_rand_mean=mean,
        pi0_rand_std=std,
        rand_repeats=rand_repeats,
        lambda_=lambda_,
        studies=tuple(matrix.study_ids[i] for i in replication_rows),
        total_markers=len(matrix.marker_ids),
        threshold_c=c,
        seed=seed,
        selected_markers=tuple(matrix.marker_ids[i] for i in selected),
        lfc_pvalues=tuple(lfc.tolist()),
    )


def synthesize_zscore_matrix(
    setting: SimulationSetting,
    seed: Optional[int] = None,
    primary_study: str = "primary",
) -> Tuple[ZScoreMatrix, EffectMatrix]:
    """
    Z-scores drawn from a known effect matrix.

    The s replication studies have z = sqrt(n) * theta + N(0, 1). An extra
    primary study carries a strong signal at every marker, so selection keeps
    them all and the replication stage sees exactly the simulated setting.
    """
    rng = replicate_rng(setting.seed if seed is None else seed, 0)
    effects = draw_effect_matrix(setting, rng)
    replication_z = np.sqrt(setting.n) * effects.effects + rng.standard_normal(effects.effects.shape)
    primary_z = PRIMARY_SIGNAL_Z + rng.standard_normal(setting.m)

    study_ids = (primary_study,) + tuple(f"study{i + 1}" for i in range(setting.s))
    marker_ids = tuple(f"marker{j + 1}" for j in range(setting.m))
    matrix = ZScoreMatrix(
        marker_ids=marker_ids,
        study_ids=study_ids,
        z=np.vstack([primary_z[np.newaxis, :], replication_z]),
    )
    return matrix, effects
