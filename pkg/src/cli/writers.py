"""CSV and text output for the command line."""

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO

import numpy as np
import pandas as pd

from .. import __version__
from ..models.analysis import AnalysisReport
from ..models.simulation import CurveSeries, TableCell
from ..models.validity import CdfCurve

FLOAT_FORMAT = "%.12g"

TABLE_COLUMNS = ["gamma", "pi0", "mu_min", "mu_max", "kind", "mean", "std", "mc_se", "reps", "seed"]
CURVE_COLUMNS = ["t_or_lambda", "value", "kind"]
CDF_COLUMNS = ["t", "F_LFC", "F_rand", "identity"]

# Flags that change how a run executes but not what it computes
EXECUTION_ONLY = {"workers", "chunk_size", "log_level", "out", "curves_out", "func"}


def provenance_line(args: argparse.Namespace, seed: object) -> str:
    """
    Comment line recording the command, every result-relevant flag and the seed.

    ``seed`` is the effective seed, which may come from a grid rather than a flag.
    Execution-only flags are left out so that the same computation always
    yields byte-identical files.
    """
    items = []
    for key, value in sorted(vars(args).items()):
        if key in EXECUTION_ONLY or key in ("command", "seed"):
            continue
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        items.append(f"{key}={value}")
    items.append(f"seed={seed}")
    return f"# randrep {__version__} {args.command} " + " ".join(items)


def _write_frame(frame: pd.DataFrame, path: Optional[Path], header: str) -> None:
    if path is None:
        _emit(frame, sys.stdout, header)
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        _emit(frame, f, header)


def _emit(frame: pd.DataFrame, stream: TextIO, header: str) -> None:
    stream.write(header + "\n")
    frame.to_csv(stream, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def write_table(cells: Sequence[TableCell], path: Optional[Path], header: str) -> None:
    """One row per (setting, p-value kind)."""
    rows = [
        {
            "gamma": cell.setting.gamma,
            "pi0": cell.setting.pi0,
            "mu_min": cell.setting.mu_min,
            "mu_max": cell.setting.mu_max,
            "kind": cell.pvalue_kind.value,
            "mean": cell.mean,
            "std": cell.std,
            "mc_se": cell.mc_standard_error,
            "reps": cell.setting.reps,
            "seed": cell.setting.seed,
        }
        for cell in cells
    ]
    _write_frame(pd.DataFrame(rows, columns=TABLE_COLUMNS), path, header)


def write_curves(curves: Sequence[CurveSeries], path: Optional[Path], header: str) -> None:
    """Long format: one row per curve point."""
    rows: List[Dict[str, object]] = []
    for curve in curves:
        rows.extend(
            {"t_or_lambda": x, "value": value, "kind": curve.kind}
            for x, value in zip(curve.x, curve.values)
        )
    _write_frame(pd.DataFrame(rows, columns=CURVE_COLUMNS), path, header)


def write_cdf_curves(lfc: CdfCurve, rand: CdfCurve, path: Optional[Path], header: str) -> None:
    """Exact LFC and randomized CDFs next to the identity."""
    frame = pd.DataFrame({
        "t": lfc.grid,
        "F_LFC": lfc.values,
        "F_rand": rand.values,
        "identity": lfc.grid,
    }, columns=CDF_COLUMNS)
    _write_frame(frame, path, header)


def write_oracle(rows: Sequence[Dict[str, object]], path: Optional[Path], header: str) -> None:
    """Oracle expectations per grid cell."""
    columns = ["gamma", "pi0", "mu_min", "mu_max", "kind", "oracle"]
    _write_frame(pd.DataFrame(list(rows), columns=columns), path, header)


def write_report(report: AnalysisReport, path: Optional[Path], header: str) -> None:
    """Key/value CSV of the analysis report; to stdout as ``key = value`` lines."""
    items = report.to_dict()
    if path is None:
        sys.stdout.write(header + "\n")
        for key, value in items.items():
            if isinstance(value, float):
                value = FLOAT_FORMAT % value
            sys.stdout.write(f"{key} = {value}\n")
        return
    frame = pd.DataFrame({"key": list(items), "value": [
        FLOAT_FORMAT % v if isinstance(v, (float, np.floating)) else v for v in items.values()
    ]})
    _write_frame(frame, path, header)
