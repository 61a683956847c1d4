"""Data models for replicability analysis."""

from .analysis import AnalysisReport, ZScoreMatrix
from .pvalues import (
    MarginalModelKind,
    MarginalResult,
    Pi0Estimate,
    PValueKind,
    PValueRecord,
    ReplicabilityConfig,
    StudySample,
)
from .simulation import (
    CurveSeries,
    EffectMatrix,
    ReplicationResult,
    SimulationSetting,
    TableCell,
)
from .validity import CdfCurve, OrderCheckReport

__all__ = [
    "AnalysisReport",
    "ZScoreMatrix",
    "MarginalModelKind",
    "MarginalResult",
    "Pi0Estimate",
    "PValueKind",
    "PValueRecord",
    "ReplicabilityConfig",
    "StudySample",
    "CurveSeries",
    "EffectMatrix",
    "ReplicationResult",
    "SimulationSetting",
    "TableCell",
    "CdfCurve",
    "OrderCheckReport",
]
