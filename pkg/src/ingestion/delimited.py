"""Tab- or comma-separated z-score tables."""

import logging
from pathlib import Path
from typing import List, Optional, Union

import numpy as np
import pandas as pd

from ..errors import DataError
from ..models.analysis import ZScoreMatrix
from .source import ZScoreSource

logger = logging.getLogger(__name__)


def detect_separator(path: Path) -> str:
    """Tab for .tsv/.tab files, comma for .csv, otherwise sniffed from the header line."""
    suffix = path.suffix.lower()
    if suffix in (".tsv", ".tab"):
        return "\t"
    if suffix == ".csv":
        return ","
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            if line.strip() and not line.startswith("#"):
                return "\t" if "\t" in line else ","
    return ","


def _header_fields(path: Path, sep: str) -> List[str]:
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            if line.strip() and not line.startswith("#"):
                return [field.strip() for field in line.rstrip("\r\n").split(sep)]
    return []


def _parse_float(text: str) -> float:
    try:
        return float(text.strip())
    except ValueError:
        return float("nan")


class DelimitedZScoreSource(ZScoreSource):
    """
    Z-scores from a delimited text file.

    Layout: a header row of study ids after a leading marker-id column, then
    one row per marker. Lines starting with '#' are comments.
    """

    def __init__(self, source_id: str, config: dict):
        """
        Initialize delimited source.

        Config should contain:
        - path: Path to the table
        - sep: Column separator (optional, detected from the file)
        """
        super().__init__(source_id, config)
        if not config.get("path"):
            raise DataError("path is required in config")
        self.path = Path(config["path"])
        self.sep: Optional[str] = config.get("sep")

    def health_check(self) -> bool:
        """Check that the file exists and is readable."""
        return self.path.is_file()

    def load(self) -> ZScoreMatrix:
        """Read the table into a ZScoreMatrix (studies x markers)."""
        if not self.path.is_file():
            raise FileNotFoundError(f"Z-score file not found: {self.path}")
        sep = self.sep or detect_separator(self.path)
        try:
            frame = pd.read_csv(
                self.path,
                sep=sep,
                index_col=0,
                comment="#",
                dtype=str,
                keep_default_na=False,
            )
        except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
            raise DataError(f"cannot parse {self.path}: {e}") from e

        studies = _header_fields(self.path, sep)[1:]
        if len(set(studies)) != len(studies):
            raise DataError(f"{self.path}: duplicate study id in header")
        if frame.shape[1] == 0 or frame.shape[0] == 0:
            raise DataError(f"{self.path}: need at least one study column and one marker row")
        if frame.index.has_duplicates:
            dup = frame.index[frame.index.duplicated()][0]
            raise DataError(f"{self.path}: duplicate marker id {dup!r}")

        values = frame.apply(lambda col: col.map(_parse_float))
        missing = values.isna().to_numpy()
        if missing.any():
            row, col = np.argwhere(missing)[0]
            raise DataError(
                f"{self.path}: missing or non-numeric z-score for marker "
                f"{frame.index[row]!r} in study {frame.columns[col]!r}"
            )

        logger.info("Loaded %d markers x %d studies from %s",
                    values.shape[0], values.shape[1], self.path)
        return ZScoreMatrix(
            marker_ids=tuple(str(m) for m in frame.index),
            study_ids=tuple(str(s).strip() for s in frame.columns),
            z=values.to_numpy(dtype=float).T,
        )


def read_zscore_matrix(path: Union[str, Path], sep: Optional[str] = None) -> ZScoreMatrix:
    """Read a delimited z-score table."""
    return DelimitedZScoreSource(str(path), {"path": str(path), "sep": sep}).load()


def write_zscore_matrix(matrix: ZScoreMatrix, path: Union[str, Path], sep: Optional[str] = None) -> None:
    """Write a matrix in the layout read by DelimitedZScoreSource; values round-trip exactly."""
    path = Path(path)
    if sep is None:
        sep = "\t" if path.suffix.lower() in (".tsv", ".tab") else ","
    frame = pd.DataFrame(matrix.z.T, index=list(matrix.marker_ids), columns=list(matrix.study_ids))
    frame.index.name = "marker"
    frame.to_csv(path, sep=sep, float_format="%.17g")
    logger.debug("Wrote %d markers to %s", len(matrix.marker_ids), path)
