"""Pytest configuration and fixtures."""

import numpy as np
import pytest
from dotenv import load_dotenv

from src.config import reset_config
from src.models.pvalues import ReplicabilityConfig
from src.models.simulation import SimulationSetting

# Load environment variables from .env file
load_dotenv()

N = 50


@pytest.fixture(autouse=True)
def fresh_config():
    """Re-read RANDREP_* variables in every test."""
    reset_config()
    yield
    reset_config()


@pytest.fixture
def rng():
    """Seeded generator."""
    return np.random.default_rng(12345)


@pytest.fixture
def config_10_6():
    """Ten studies, replication required in six."""
    return ReplicabilityConfig(s=10, gamma=6)


@pytest.fixture
def null_column():
    """Null effect column: five small negative effects and five effects of 1."""
    return [-1.5 / np.sqrt(N)] * 5 + [1.0] * 5


@pytest.fixture
def alternative_column():
    """Alternative effect column: all ten effects equal to 2 / sqrt(n)."""
    return [2.0 / np.sqrt(N)] * 10


@pytest.fixture
def lfc_column():
    """Least favourable configuration for s = 10, gamma = 6."""
    return [np.inf] * 5 + [0.0] * 5


@pytest.fixture
def small_setting():
    """A setting small enough to simulate in a unit test."""
    return SimulationSetting(m=20, s=4, gamma=2, pi0=0.5, mu_min=-1.0, mu_max=3.0,
                             n=10, reps=12, seed=7)
