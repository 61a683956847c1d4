"""Random effect matrices for the simulation experiments."""

import numpy as np

from ..models.simulation import EffectMatrix, SimulationSetting


def draw_positive_counts(setting: SimulationSetting, rng: np.random.Generator) -> np.ndarray:
    """
    Number of studies with a positive effect per endpoint.

    True nulls (the first m0 endpoints) draw Binomial(gamma - 1, p0); false
    nulls draw gamma + Binomial(s - gamma, p1).
    """
    null_counts = rng.binomial(setting.gamma - 1, setting.p0, size=setting.m0)
    alt_counts = setting.gamma + rng.binomial(setting.s - setting.gamma, setting.p1, size=setting.m1)
    return np.concatenate([null_counts, alt_counts])


def draw_effect_matrix(setting: SimulationSetting, rng: np.random.Generator) -> EffectMatrix:
    """
    Draw the s x m matrix of true effects.

    The studies carrying positive effects form a uniformly random subset of
    the drawn size. Positive effects are Uniform(0, mu_max]; non-positive
    effects are Uniform(mu_min / sqrt(n), 0], a point mass at 0 when mu_min = 0.
    """
    s, m = setting.s, setting.m
    counts = draw_positive_counts(setting, rng)

    # Rank of an iid uniform picks a random subset of each column
    ranks = np.argsort(np.argsort(rng.random((s, m)), axis=0), axis=0)
    positive = ranks < counts[np.newaxis, :]

    magnitudes = rng.random((s, m))
    low = setting.mu_min / np.sqrt(setting.n)
    effects = np.where(positive, setting.mu_max * (1.0 - magnitudes), low * magnitudes)

    truth = np.arange(m) < setting.m0
    return EffectMatrix(effects=effects, truth=truth, gamma=setting.gamma)
