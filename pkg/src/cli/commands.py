"""Subcommand handlers. Each returns the process exit status."""

import argparse
import dataclasses
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np

from ..analysis import analyze, selection_ecdf_curves
from ..config import GridCatalog, get_config
from ..config.models import EngineConfig
from ..errors import ConfigError
from ..ingestion import read_zscore_matrix
from ..models.pvalues import PValueKind, ReplicabilityConfig
from ..models.simulation import SimulationSetting
from ..simulation import (
    ecdf_realization_curves,
    expectation_oracle,
    expected_lambda_curves,
    oracle_lambda_curve,
    ordering_violations,
    parse_lambda_sweep,
    run_table,
)
from ..validity import exact_lfc_cdf, exact_rand_cdf
from .writers import (
    provenance_line,
    write_cdf_curves,
    write_curves,
    write_oracle,
    write_report,
    write_table,
)

logger = logging.getLogger(__name__)

ORACLE_KINDS = (PValueKind.LFC, PValueKind.RAND)


def _out_path(args: argparse.Namespace) -> Optional[Path]:
    return Path(args.out) if args.out else None


def _engine(args: argparse.Namespace) -> EngineConfig:
    engine = get_config().engine
    workers = getattr(args, "workers", None)
    chunk_size = getattr(args, "chunk_size", None)
    if workers is not None and workers < 1:
        raise ConfigError(f"--workers must be at least 1, got {workers}")
    if chunk_size is not None and chunk_size < 1:
        raise ConfigError(f"--chunk-size must be at least 1, got {chunk_size}")
    return dataclasses.replace(
        engine,
        workers=engine.workers if workers is None else workers,
        chunk_size=engine.chunk_size if chunk_size is None else chunk_size,
    )


def _grid_settings(args: argparse.Namespace, engine: EngineConfig) -> List[SimulationSetting]:
    """Settings of the requested grid with command-line overrides applied."""
    catalog = GridCatalog(get_config().grids.grids_dir)
    settings = catalog.settings(args.grid, engine)
    if not settings:
        raise ConfigError(f"grid {args.grid!r} expands to no settings")

    overrides: Dict[str, object] = {}
    if getattr(args, "reps", None) is not None:
        overrides["reps"] = args.reps
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "pvalue_kind", None):
        overrides["pvalue_kinds"] = tuple(PValueKind(kind) for kind in args.pvalue_kind)
    if overrides:
        settings = [setting.with_updates(**overrides) for setting in settings]
    return settings


def _seed_label(settings: List[SimulationSetting]) -> str:
    return ",".join(str(seed) for seed in sorted({setting.seed for setting in settings}))


def parse_theta(text: str) -> List[float]:
    """
    Parse an effect column such as ``-0.2121x5,1x5``.

    Each comma-separated token is a value, optionally followed by ``x`` and a
    repeat count. ``inf`` and ``-inf`` are accepted.
    """
    values: List[float] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ConfigError(f"empty effect in {text!r}")
        value_text, count = token, 1
        if "x" in token:
            value_text, _, count_text = token.rpartition("x")
            try:
                count = int(count_text)
            except ValueError:
                raise ConfigError(f"invalid repeat count in {token!r}") from None
            if count < 1:
                raise ConfigError(f"repeat count must be positive in {token!r}")
        try:
            value = float(value_text)
        except ValueError:
            raise ConfigError(f"invalid effect {value_text!r}") from None
        if np.isnan(value):
            raise ConfigError("effects must not be NaN")
        values.extend([value] * count)
    return values


def _unit_grid(points: int, flag: str) -> np.ndarray:
    if points < 2:
        raise ConfigError(f"{flag} must be at least 2, got {points}")
    return np.linspace(0.0, 1.0, points)


def cmd_simulate_table(args: argparse.Namespace) -> int:
    engine = _engine(args)
    settings = _grid_settings(args, engine)
    cells = run_table(settings, engine)
    violations = ordering_violations(cells)
    if violations:
        logger.warning("%d ordering violation(s) in %d cells", len(violations), len(cells))
    write_table(cells, _out_path(args), provenance_line(args, _seed_label(settings)))
    return 0


def cmd_simulate_curves(args: argparse.Namespace) -> int:
    engine = _engine(args)
    settings = _grid_settings(args, engine)
    if len(settings) > 1:
        logger.warning("Grid %s has %d settings; using the first", args.grid, len(settings))
    setting = settings[0]

    if args.lambda_sweep:
        lambdas = parse_lambda_sweep(args.lambda_sweep)
        curves = expected_lambda_curves(setting, lambdas, engine)
        if args.with_oracle:
            curves.extend(
                oracle_lambda_curve(setting, kind, lambdas)
                for kind in setting.pvalue_kinds if kind in ORACLE_KINDS
            )
    else:
        curves = ecdf_realization_curves(setting, _unit_grid(args.t_points, "--t-points"),
                                         args.replicate)
    write_curves(curves, _out_path(args), provenance_line(args, setting.seed))
    return 0


def cmd_cdf_curves(args: argparse.Namespace) -> int:
    config = ReplicabilityConfig(args.s, args.gamma)
    theta = parse_theta(args.theta)
    grid = _unit_grid(args.points, "--points")
    lfc = exact_lfc_cdf(theta, config, args.n, grid)
    rand = exact_rand_cdf(theta, config, args.n, grid)
    write_cdf_curves(lfc, rand, _out_path(args), provenance_line(args, "none"))
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    seed = get_config().engine.seed if args.seed is None else args.seed
    if seed < 0:
        raise ConfigError(f"--seed must be non-negative, got {seed}")
    grid = _unit_grid(args.t_points, "--t-points") if args.curves_out else None
    matrix = read_zscore_matrix(args.input)
    report = analyze(
        matrix,
        primary_study=args.primary,
        q=args.q,
        gamma=args.gamma,
        lambda_=args.lambda_,
        rand_repeats=args.rand_repeats,
        seed=seed,
    )
    logger.info("pi0 LFC %.6f, randomized %.6f (std %.6f)",
                report.pi0_lfc, report.pi0_rand_mean, report.pi0_rand_std)
    header = provenance_line(args, seed)
    write_report(report, _out_path(args), header)
    if grid is not None:
        curves = selection_ecdf_curves(report, grid)
        write_curves(curves, Path(args.curves_out), header)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    settings = _grid_settings(args, get_config().engine)
    rows = []
    for setting in settings:
        kinds = setting.pvalue_kinds if args.pvalue_kind else [
            kind for kind in setting.pvalue_kinds if kind in ORACLE_KINDS
        ]
        for kind in kinds:
            rows.append({
                "gamma": setting.gamma,
                "pi0": setting.pi0,
                "mu_min": setting.mu_min,
                "mu_max": setting.mu_max,
                "kind": kind.value,
                "oracle": expectation_oracle(setting, kind),
            })
    write_oracle(rows, _out_path(args), provenance_line(args, "none"))
    return 0


def cmd_list_grids(args: argparse.Namespace) -> int:
    catalog = GridCatalog(get_config().grids.grids_dir)
    for name in catalog.list_grids():
        sys.stdout.write(name + "\n")
    return 0


COMMANDS = {
    "simulate-table": cmd_simulate_table,
    "simulate-curves": cmd_simulate_curves,
    "cdf-curves": cmd_cdf_curves,
    "analyze": cmd_analyze,
    "oracle": cmd_oracle,
    "list-grids": cmd_list_grids,
}
