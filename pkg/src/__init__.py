"""Randomized p-values for replicability analysis."""

__version__ = "0.1.0"
