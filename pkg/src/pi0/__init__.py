"""Proportion-of-nulls estimation."""

from .estimators import ecdf, lambda_sweep, schweder_spjotvoll

__all__ = ["ecdf", "lambda_sweep", "schweder_spjotvoll"]
