"""Monte Carlo draws of endpoint p-values for a fixed effect column."""

from typing import Sequence

import numpy as np

from ..errors import ConfigError, DomainError
from ..marginal import draw_lfc_pvalues
from ..models.pvalues import MarginalModelKind, PValueKind, ReplicabilityConfig
from ..replicability import (
    fisher_pc_pvalue,
    partial_conjunction_lfc_pvalues,
    randomize,
    stouffer_pc_pvalue,
    threshold_c,
)
from ..simulation.engine import CLAMP_HIGH, CLAMP_LOW


def _combine(per_study: np.ndarray, config: ReplicabilityConfig, kind: PValueKind,
             rng: np.random.Generator) -> np.ndarray:
    kind = PValueKind(kind)
    if kind is PValueKind.LFC:
        return partial_conjunction_lfc_pvalues(per_study, config)
    if kind is PValueKind.RAND:
        lfc = partial_conjunction_lfc_pvalues(per_study, config)
        uniforms = rng.random(lfc.shape[0])
        return np.asarray(randomize(lfc, threshold_c(config), uniforms))
    clamped = np.clip(per_study, CLAMP_LOW, CLAMP_HIGH)
    if kind is PValueKind.STOUFFER:
        return np.asarray(stouffer_pc_pvalue(clamped, config.gamma))
    return np.asarray(fisher_pc_pvalue(clamped, config.gamma))


def sample_endpoint_pvalues(
    theta_column: Sequence[float],
    config: ReplicabilityConfig,
    n: int,
    draws: int,
    rng: np.random.Generator,
    kind: PValueKind = PValueKind.LFC,
) -> np.ndarray:
    """
    ``draws`` independent p-values of one endpoint with the given effects (Z model).

    Effects of +inf yield per-study p-values of exactly 0.
    """
    theta = np.asarray(theta_column, dtype=float)
    if theta.shape != (config.s,):
        raise ConfigError(f"expected {config.s} effects, got shape {theta.shape}")
    if draws < 1:
        raise DomainError(f"draws must be positive, got {draws}")
    if np.any(np.isnan(theta)):
        raise DomainError("effects contain NaN")
    finite = np.where(np.isfinite(theta), theta, 0.0)
    effects = np.repeat(finite[:, np.newaxis], draws, axis=1)
    per_study = draw_lfc_pvalues(rng, effects, n, MarginalModelKind.Z_KNOWN_UNIT_VARIANCE)
    per_study[theta == np.inf] = 0.0
    per_study[theta == -np.inf] = 1.0
    return _combine(per_study, config, kind, rng)


def sample_lfc_configuration(
    config: ReplicabilityConfig,
    draws: int,
    rng: np.random.Generator,
    kind: PValueKind = PValueKind.LFC,
) -> np.ndarray:
    """
    P-values under the least favourable configuration.

    gamma - 1 per-study p-values are 0 and the remaining s - gamma + 1 are
    independent uniforms.
    """
    if draws < 1:
        raise DomainError(f"draws must be positive, got {draws}")
    per_study = np.zeros((config.s, draws))
    per_study[config.gamma - 1:] = rng.random((config.k, draws))
    return _combine(per_study, config, kind, rng)
