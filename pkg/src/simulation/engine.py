"""Monte Carlo replicates of the proportion-of-nulls experiment."""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..errors import PreconditionError
from ..marginal import draw_lfc_pvalues
from ..models.pvalues import PValueKind
from ..models.simulation import ReplicationResult, SimulationSetting
from ..pi0 import lambda_sweep, schweder_spjotvoll
from ..replicability import (
    fisher_pc_pvalue,
    partial_conjunction_lfc_pvalues,
    randomize,
    stouffer_pc_pvalue,
    threshold_c,
)
from .effects import draw_effect_matrix
from .streams import replicate_rng

logger = logging.getLogger(__name__)

# Per-study p-values are clamped into this range before the Stouffer and
# Fisher combiners, whose transforms are singular at 0 and 1.
CLAMP_LOW = np.finfo(float).tiny
CLAMP_HIGH = np.nextafter(1.0, 0.0)


def replicate_pvalues(
    setting: SimulationSetting,
    replicate_index: int,
) -> Dict[PValueKind, np.ndarray]:
    """
    Endpoint p-values of every requested kind for one replicate.

    Draw order inside the replicate stream is fixed (effects, data, uniforms),
    so the outcome depends only on (seed, replicate_index).
    """
    if not 0 <= replicate_index < setting.reps:
        raise PreconditionError(
            f"replicate_index must lie in [0, {setting.reps}), got {replicate_index}"
        )
    rng = replicate_rng(setting.seed, replicate_index)
    effects = draw_effect_matrix(setting, rng)
    per_study = draw_lfc_pvalues(
        rng, effects.effects, setting.n, setting.model, setting.observations
    )
    uniforms = rng.random(setting.m)

    config = setting.replicability
    lfc = partial_conjunction_lfc_pvalues(per_study, config)
    pvalues: Dict[PValueKind, np.ndarray] = {}
    for kind in setting.pvalue_kinds:
        if kind is PValueKind.LFC:
            pvalues[kind] = lfc
        elif kind is PValueKind.RAND:
            pvalues[kind] = np.asarray(randomize(lfc, threshold_c(config), uniforms))
        elif kind is PValueKind.STOUFFER:
            clamped = np.clip(per_study, CLAMP_LOW, CLAMP_HIGH)
            pvalues[kind] = np.asarray(stouffer_pc_pvalue(clamped, setting.gamma))
        elif kind is PValueKind.FISHER:
            clamped = np.clip(per_study, CLAMP_LOW, CLAMP_HIGH)
            pvalues[kind] = np.asarray(fisher_pc_pvalue(clamped, setting.gamma))
    return pvalues


def simulate_replication(setting: SimulationSetting, replicate_index: int) -> ReplicationResult:
    """One replicate: fresh effects and data, p-values and an estimate per kind."""
    pvalues = replicate_pvalues(setting, replicate_index)
    estimates = {
        kind: schweder_spjotvoll(values, setting.lambda_, kind)
        for kind, values in pvalues.items()
    }
    return ReplicationResult(
        replicate_index=replicate_index,
        pvalues=pvalues,
        estimates=estimates,
    )


def simulate_chunk(
    setting: SimulationSetting,
    start: int,
    stop: int,
    lambdas: Optional[Sequence[float]] = None,
) -> Dict[str, List[List[float]]]:
    """
    Estimates for replicates ``start..stop - 1``.

    Runs in worker processes, so it takes and returns plain picklable data:
    ``{kind value: [[estimate per lambda] per replicate]}``.
    """
    lambdas = [setting.lambda_] if lambdas is None else list(lambdas)
    out: Dict[str, List[List[float]]] = {kind.value: [] for kind in setting.pvalue_kinds}
    for index in range(start, stop):
        pvalues = replicate_pvalues(setting, index)
        for kind, values in pvalues.items():
            estimates = lambda_sweep(values, lambdas, kind)
            out[kind.value].append([estimate.value for estimate in estimates])
    logger.debug("Simulated replicates %d..%d (gamma=%d, pi0=%s)", start, stop - 1,
                 setting.gamma, setting.pi0)
    return out
