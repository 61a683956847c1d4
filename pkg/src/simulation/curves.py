"""Curve data: ECDF realizations and estimator expectations over lambda."""

import asyncio
import logging
from typing import List, Optional, Sequence

import numpy as np

from ..config import get_config
from ..config.models import EngineConfig
from ..errors import ConfigError
from ..models.simulation import CurveSeries, SimulationSetting
from ..numerics.validation import check_probability
from ..pi0 import ecdf
from .engine import replicate_pvalues

logger = logging.getLogger(__name__)


def ecdf_realization_curves(
    setting: SimulationSetting,
    t_grid: Sequence[float],
    replicate_index: int = 0,
) -> List[CurveSeries]:
    """
    ECDFs of one replicate's p-values of every requested kind.

    A ``reference`` curve through (0, 1 - pi0) and (1, 1) is appended: the
    ECDF of p-values that are exactly uniform under the null and 0 under the
    alternative.
    """
    grid = check_probability(t_grid, "t_grid")
    if grid.ndim != 1 or grid.size == 0:
        raise ConfigError("t_grid must be a non-empty sequence")
    pvalues = replicate_pvalues(setting, replicate_index)

    curves = [
        CurveSeries(kind=kind.value, x=tuple(grid.tolist()),
                    values=tuple(np.atleast_1d(ecdf(values, grid)).tolist()))
        for kind, values in pvalues.items()
    ]
    reference = (1.0 - setting.pi0) + setting.pi0 * grid
    curves.append(CurveSeries(kind="reference", x=tuple(grid.tolist()),
                              values=tuple(reference.tolist())))
    return curves


def expected_lambda_curves(
    setting: SimulationSetting,
    lambdas: Sequence[float],
    engine: Optional[EngineConfig] = None,
) -> List[CurveSeries]:
    """Monte Carlo expectation of the estimator at each lambda, per p-value kind."""
    from ..orchestrator import SimulationOrchestrator

    if len(lambdas) == 0:
        return []
    for lam in lambdas:
        if not 0.0 <= lam < 1.0:
            raise ConfigError(f"lambda must lie in [0, 1), got {lam}")
    engine = engine or get_config().engine

    async def _run() -> List[CurveSeries]:
        async with SimulationOrchestrator(engine) as orchestrator:
            return await orchestrator.run_lambda_sweep(setting, lambdas)

    logger.info("Sweeping %d lambda values over %d replicates", len(lambdas), setting.reps)
    return asyncio.run(_run())


def parse_lambda_sweep(text: str) -> List[float]:
    """Parse ``a:b:step`` into the inclusive list a, a + step, ..., b."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"lambda sweep must look like a:b:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ConfigError(f"lambda sweep must be numeric, got {text!r}") from None
    if step <= 0 or stop < start:
        raise ConfigError(f"invalid lambda sweep {text!r}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    # Rounded so 0.1:0.9:0.1 yields 0.3 rather than 0.30000000000000004
    return [round(start + i * step, 12) for i in range(count)]
