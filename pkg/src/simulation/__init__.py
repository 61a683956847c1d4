"""Monte Carlo engine and semi-analytic oracle."""

from .curves import ecdf_realization_curves, expected_lambda_curves, parse_lambda_sweep
from .effects import draw_effect_matrix, draw_positive_counts
from .engine import replicate_pvalues, simulate_chunk, simulate_replication
from .oracle import expectation_oracle, mixture_cdf, oracle_lambda_curve
from .streams import chunk_ranges, replicate_rng
from .table import OrderingViolation, ordering_violations, run_table

__all__ = [
    "ecdf_realization_curves",
    "expected_lambda_curves",
    "parse_lambda_sweep",
    "draw_effect_matrix",
    "draw_positive_counts",
    "replicate_pvalues",
    "simulate_chunk",
    "simulate_replication",
    "expectation_oracle",
    "mixture_cdf",
    "oracle_lambda_curve",
    "chunk_ranges",
    "replicate_rng",
    "OrderingViolation",
    "ordering_violations",
    "run_table",
]
