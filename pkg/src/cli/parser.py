"""Argument parsing for the randrep command line."""

import argparse
import sys
from typing import List, NoReturn, Optional

from ..models.pvalues import PValueKind

USAGE_EXIT_CODE = 1

PVALUE_KIND_CHOICES = [kind.value for kind in PValueKind]


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that exits with status 1 on usage errors."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT_CODE, f"{self.prog}: error: {message}\n")


def _add_engine_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--reps", type=int, default=None,
                        help="Replicates per setting (overrides the grid).")
    parser.add_argument("--seed", type=int, default=None,
                        help="Master seed (overrides the grid).")
    parser.add_argument("--workers", type=int, default=None,
                        help="Worker processes; results do not depend on it.")
    parser.add_argument("--chunk-size", type=int, default=None,
                        help="Replicates per work unit.")


def _add_kind_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pvalue-kind", action="append", choices=PVALUE_KIND_CHOICES,
                        default=None, dest="pvalue_kind",
                        help="P-value kind; repeat for several (default: from the grid).")


def build_parser() -> CliArgumentParser:
    """Parser with one subcommand per workflow."""
    parser = CliArgumentParser(
        prog="randrep",
        description="Randomized p-values for replicability analysis and pi0 estimation.",
    )
    parser.add_argument("--log-level", default=None,
                        help="Logging level (default: RANDREP_LOG_LEVEL or INFO).")
    subparsers = parser.add_subparsers(dest="command", required=True,
                                       parser_class=CliArgumentParser)

    table = subparsers.add_parser("simulate-table",
                                  help="Monte Carlo mean and std of the pi0 estimator per grid cell.")
    table.add_argument("--grid", "--config", dest="grid", required=True,
                       help=("Grid name from the catalog, or path to a grid file "
                             "(YAML mapping or flat 'key = value' lines)."))
    table.add_argument("--out", default=None, help="Output CSV (default: stdout).")
    _add_kind_flag(table)
    _add_engine_flags(table)

    curves = subparsers.add_parser("simulate-curves",
                                   help="ECDF realization or expected estimator over a lambda sweep.")
    curves.add_argument("--grid", "--config", dest="grid", required=True,
                        help="Grid name or path; its first setting is used.")
    curves.add_argument("--lambda-sweep", default=None, metavar="A:B:STEP",
                        help="Sweep the tuning parameter instead of plotting ECDFs.")
    curves.add_argument("--with-oracle", action="store_true",
                        help="Add semi-analytic oracle curves to a lambda sweep.")
    curves.add_argument("--t-points", type=int, default=101,
                        help="Grid points on [0, 1] for ECDF curves.")
    curves.add_argument("--replicate", type=int, default=0,
                        help="Replicate index drawn for ECDF curves.")
    curves.add_argument("--out", default=None, help="Output CSV (default: stdout).")
    _add_kind_flag(curves)
    _add_engine_flags(curves)

    cdf = subparsers.add_parser("cdf-curves",
                                help="Exact LFC and randomized p-value CDFs for one effect column.")
    cdf.add_argument("--s", type=int, required=True, help="Number of studies.")
    cdf.add_argument("--gamma", type=int, required=True, help="Replicability threshold.")
    cdf.add_argument("--n", type=int, required=True, help="Per-study sample size.")
    cdf.add_argument("--theta", required=True,
                     help='Effects, comma separated; "VALUExCOUNT" repeats a value.')
    cdf.add_argument("--points", type=int, default=1001, help="Grid points on [0, 1].")
    cdf.add_argument("--out", default=None, help="Output CSV (default: stdout).")

    analyze = subparsers.add_parser("analyze",
                                    help="Replicability analysis of a z-score table.")
    analyze.add_argument("--input", required=True, help="Delimited z-score table.")
    analyze.add_argument("--primary", required=True, help="Study id used for selection.")
    analyze.add_argument("--q", type=float, default=0.2, help="BH level for selection.")
    analyze.add_argument("--gamma", type=int, required=True, help="Replicability threshold.")
    analyze.add_argument("--lambda", dest="lambda_", type=float, default=0.5,
                         help="Tuning parameter of the estimator.")
    analyze.add_argument("--rand-repeats", type=int, default=100000,
                         help="Randomizations averaged for the randomized estimate.")
    analyze.add_argument("--seed", type=int, default=None, help="Seed for the randomizations.")
    analyze.add_argument("--out", default=None, help="Output CSV (default: stdout).")
    analyze.add_argument("--curves-out", default=None,
                         help="Also write ECDFs of the selected LFC and randomized p-values here.")
    analyze.add_argument("--t-points", type=int, default=101,
                         help="Grid points on [0, 1] for --curves-out.")

    oracle = subparsers.add_parser("oracle",
                                   help="Semi-analytic expectation of the estimator per grid cell.")
    oracle.add_argument("--grid", "--config", dest="grid", required=True,
                        help="Grid name, or path to a grid file (YAML or flat key = value lines).")
    oracle.add_argument("--out", default=None, help="Output CSV (default: stdout).")
    _add_kind_flag(oracle)

    subparsers.add_parser("list-grids", help="Names of the grids in the catalog.")
    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    return build_parser().parse_args(argv)
