"""Unit tests for the asyncio Monte Carlo orchestrator."""

import pytest

from src.config.models import EngineConfig
from src.models.pvalues import PValueKind
from src.orchestrator import SimulationOrchestrator
from src.simulation import simulate_replication


async def test_start_and_stop():
    orchestrator = SimulationOrchestrator(EngineConfig(workers=2))
    await orchestrator.start()
    assert orchestrator.running is True
    assert orchestrator._executor is not None
    await orchestrator.stop()
    assert orchestrator.running is False
    assert orchestrator._executor is None


async def test_run_setting_keeps_replicate_order(small_setting):
    async with SimulationOrchestrator(EngineConfig(chunk_size=5)) as orchestrator:
        estimates = await orchestrator.run_setting(small_setting)
    assert set(estimates) == {PValueKind.LFC, PValueKind.RAND}
    assert len(estimates[PValueKind.LFC]) == small_setting.reps
    for index in (0, 7, small_setting.reps - 1):
        expected = simulate_replication(small_setting, index).estimates[PValueKind.RAND].value
        assert estimates[PValueKind.RAND][index] == [expected]


async def test_worker_count_does_not_change_results(small_setting):
    grid = [small_setting, small_setting.with_updates(gamma=3, seed=8)]
    async with SimulationOrchestrator(EngineConfig(workers=1, chunk_size=5)) as orchestrator:
        serial = await orchestrator.run_table(grid)
    async with SimulationOrchestrator(EngineConfig(workers=2, chunk_size=5)) as orchestrator:
        parallel = await orchestrator.run_table(grid)
    assert serial == parallel
    assert len(serial) == 4


async def test_lambda_sweep(small_setting):
    lambdas = [0.25, 0.5]
    async with SimulationOrchestrator(EngineConfig(chunk_size=4)) as orchestrator:
        curves = await orchestrator.run_lambda_sweep(small_setting, lambdas)
        cells = await orchestrator.run_table([small_setting])
    assert [curve.kind for curve in curves] == ["lfc", "rand"]
    assert curves[0].x == (0.25, 0.5)
    assert curves[1].values[1] == pytest.approx(cells[1].mean, abs=1e-12)
