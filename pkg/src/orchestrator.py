"""Parallel Monte Carlo orchestration."""

import asyncio
import logging
import math
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from .config.models import EngineConfig
from .models.pvalues import PValueKind
from .models.simulation import CurveSeries, SimulationSetting, TableCell
from .simulation.engine import simulate_chunk
from .simulation.streams import chunk_ranges

logger = logging.getLogger(__name__)


class SimulationOrchestrator:
    """Runs replicate chunks on an executor and reassembles them in replicate order."""

    def __init__(self, engine: Optional[EngineConfig] = None):
        """Initialize orchestrator with execution settings."""
        self.engine = engine or EngineConfig()
        self._executor: Optional[Executor] = None
        self.running = False

    async def start(self):
        """Create the worker pool."""
        if self.engine.workers > 1:
            self._executor = ProcessPoolExecutor(max_workers=self.engine.workers)
        # workers == 1 uses the loop's default executor
        self.running = True

    async def stop(self):
        """Shut the worker pool down."""
        self.running = False
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    async def __aenter__(self) -> "SimulationOrchestrator":
        await self.start()
        return self

    async def __aexit__(self, exc_type, exc, tb):
        await self.stop()

    async def run_setting(
        self,
        setting: SimulationSetting,
        lambdas: Optional[Sequence[float]] = None,
    ) -> Dict[PValueKind, List[List[float]]]:
        """
        Estimates of every replicate of one setting.

        Returns ``{kind: [[estimate per lambda] per replicate]}`` with replicates
        in index order, whatever order the chunks completed in.
        """
        loop = asyncio.get_running_loop()
        ranges = chunk_ranges(setting.reps, self.engine.chunk_size)
        lambdas = None if lambdas is None else [float(lam) for lam in lambdas]
        tasks = [
            loop.run_in_executor(self._executor, simulate_chunk, setting, start, stop, lambdas)
            for start, stop in ranges
        ]
        # gather preserves submission order
        chunks = await asyncio.gather(*tasks)

        merged: Dict[PValueKind, List[List[float]]] = {kind: [] for kind in setting.pvalue_kinds}
        for chunk in chunks:
            for kind_value, rows in chunk.items():
                merged[PValueKind(kind_value)].extend(rows)
        return merged

    async def run_table(self, grid: Sequence[SimulationSetting]) -> List[TableCell]:
        """One TableCell per (setting, kind), in grid order."""
        cells: List[TableCell] = []
        for position, setting in enumerate(grid, start=1):
            estimates = await self.run_setting(setting)
            for kind in setting.pvalue_kinds:
                values = [row[0] for row in estimates[kind]]
                cells.append(TableCell.from_values(setting, kind, values))
            logger.info(
                "Setting %d/%d done (gamma=%d, pi0=%s, mu=(%s, %s), reps=%d)",
                position, len(grid), setting.gamma, setting.pi0,
                setting.mu_min, setting.mu_max, setting.reps,
            )
        return cells

    async def run_lambda_sweep(
        self,
        setting: SimulationSetting,
        lambdas: Sequence[float],
    ) -> List[CurveSeries]:
        """Monte Carlo mean of the estimator for each tuning parameter."""
        estimates = await self.run_setting(setting, lambdas)
        curves = []
        for kind in setting.pvalue_kinds:
            rows = estimates[kind]
            means = [
                math.fsum(row[i] for row in rows) / len(rows)
                for i in range(len(lambdas))
            ]
            curves.append(CurveSeries(
                kind=kind.value,
                x=tuple(float(lam) for lam in lambdas),
                values=tuple(means),
            ))
        return curves
