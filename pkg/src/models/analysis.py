"""Replicability analysis data models."""

from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from ..errors import DataError


@dataclass
class ZScoreMatrix:
    """Z-scores of every marker in every study (studies x markers)."""
    marker_ids: Tuple[str, ...]
    study_ids: Tuple[str, ...]
    z: np.ndarray

    def __post_init__(self):
        self.marker_ids = tuple(str(m) for m in self.marker_ids)
        self.study_ids = tuple(str(s) for s in self.study_ids)
        self.z = np.asarray(self.z, dtype=float)
        if self.z.shape != (len(self.study_ids), len(self.marker_ids)):
            raise DataError(
                f"z has shape {self.z.shape}, expected "
                f"({len(self.study_ids)}, {len(self.marker_ids)})"
            )
        if not np.all(np.isfinite(self.z)):
            raise DataError("z-score matrix has missing or non-finite cells")
        if len(set(self.study_ids)) != len(self.study_ids):
            raise DataError("study ids must be unique")

    def study_index(self, study_id: str) -> int:
        """Row index of a study; DataError for unknown ids."""
        try:
            return self.study_ids.index(study_id)
        except ValueError:
            raise DataError(f"unknown study id: {study_id!r}") from None


@dataclass
class AnalysisReport:
    """Outcome of the selection / replicability / pi0 pipeline."""
    q: float
    gamma: int
    selected_count: int
    pi0_lfc: float
    pi0_rand_mean: float
    pi0_rand_std: float
    rand_repeats: int
    lambda_: float = 0.5
    studies: Tuple[str, ...] = ()
    total_markers: int = 0
    threshold_c: float = 0.0
    seed: int = 0
    selected_markers: Tuple[str, ...] = field(default_factory=tuple)
    # per selected marker, in selected_markers order; not part of the flat report
    lfc_pvalues: Tuple[float, ...] = field(default_factory=tuple, repr=False)

    def to_dict(self) -> Dict[str, object]:
        """Flat key/value view used by the text and CSV writers."""
        return {
            "q": self.q,
            "gamma": self.gamma,
            "lambda": self.lambda_,
            "studies": ",".join(self.studies),
            "total_markers": self.total_markers,
            "selected_count": self.selected_count,
            "threshold_c": self.threshold_c,
            "pi0_lfc": self.pi0_lfc,
            "pi0_rand_mean": self.pi0_rand_mean,
            "pi0_rand_std": self.pi0_rand_std,
            "rand_repeats": self.rand_repeats,
            "seed": self.seed,
        }
