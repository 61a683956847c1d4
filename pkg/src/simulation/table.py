"""Simulation tables and the ordering claims they are expected to satisfy."""

import asyncio
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from ..config import get_config
from ..config.models import EngineConfig
from ..errors import ConfigError
from ..models.pvalues import PValueKind
from ..models.simulation import SimulationSetting, TableCell

logger = logging.getLogger(__name__)

SIGMA_MULTIPLIER = 3.0


@dataclass(frozen=True)
class OrderingViolation:
    """A table cell that breaks one of the expected orderings."""
    setting: SimulationSetting
    pvalue_kind: PValueKind
    rule: str
    detail: str


def run_table(
    grid: Sequence[SimulationSetting],
    engine: Optional[EngineConfig] = None,
) -> List[TableCell]:
    """
    Monte Carlo table: one cell per (setting, p-value kind), in grid order.

    Output is identical at any worker count.
    """
    # Imported here: the orchestrator itself imports this package
    from ..orchestrator import SimulationOrchestrator

    if not grid:
        raise ConfigError("the setting grid is empty")
    if engine is None:
        engine = get_config().engine

    async def _run() -> List[TableCell]:
        async with SimulationOrchestrator(engine) as orchestrator:
            return await orchestrator.run_table(grid)

    logger.info("Running %d settings with %d worker(s)", len(grid), engine.workers)
    return asyncio.run(_run())


def ordering_violations(
    cells: Sequence[TableCell],
    multiplier: float = SIGMA_MULTIPLIER,
) -> List[OrderingViolation]:
    """
    Cells breaking the expected orderings.

    Every cell must have mean >= pi0 - multiplier * mc_se. Where a setting has
    both an LFC and a RAND cell, mean(RAND) must not exceed mean(LFC) by more
    than multiplier times the combined Monte Carlo standard error.
    """
    violations: List[OrderingViolation] = []
    by_setting: Dict[SimulationSetting, Dict[PValueKind, TableCell]] = {}

    for cell in cells:
        by_setting.setdefault(cell.setting, {})[cell.pvalue_kind] = cell
        floor = cell.setting.pi0 - multiplier * cell.mc_standard_error
        if cell.mean < floor:
            violations.append(OrderingViolation(
                setting=cell.setting,
                pvalue_kind=cell.pvalue_kind,
                rule="non_negative_bias",
                detail=f"mean {cell.mean:.6f} < pi0 - {multiplier:g} se = {floor:.6f}",
            ))

    for setting, kinds in by_setting.items():
        lfc, rand = kinds.get(PValueKind.LFC), kinds.get(PValueKind.RAND)
        if lfc is None or rand is None:
            continue
        combined = math.hypot(lfc.mc_standard_error, rand.mc_standard_error)
        if rand.mean > lfc.mean + multiplier * combined:
            violations.append(OrderingViolation(
                setting=setting,
                pvalue_kind=PValueKind.RAND,
                rule="rand_not_above_lfc",
                detail=f"mean(rand) {rand.mean:.6f} > mean(lfc) {lfc.mean:.6f} "
                       f"+ {multiplier:g} * {combined:.6f}",
            ))

    for violation in violations:
        logger.warning("Ordering violated (%s) at gamma=%d, pi0=%s: %s",
                       violation.rule, violation.setting.gamma, violation.setting.pi0,
                       violation.detail)
    return violations
