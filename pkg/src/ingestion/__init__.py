"""Z-score ingestion layer."""

from .delimited import DelimitedZScoreSource, read_zscore_matrix, write_zscore_matrix
from .source import ZScoreSource

__all__ = [
    "ZScoreSource",
    "DelimitedZScoreSource",
    "read_zscore_matrix",
    "write_zscore_matrix",
]
