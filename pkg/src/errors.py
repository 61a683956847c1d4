"""Exception types raised across the package."""


class RandrepError(Exception):
    """Base class for all package errors."""


class DomainError(RandrepError, ValueError):
    """Argument lies outside the domain of a function."""


class DegenerateSampleError(DomainError):
    """Sample cannot produce a test statistic (e.g. zero variance)."""


class PreconditionError(DomainError):
    """Operation called on inputs that violate its precondition."""


class ConfigError(RandrepError, ValueError):
    """Invalid configuration, setting or argument shape."""


class UnsupportedModelError(ConfigError):
    """Requested marginal model is not supported by the operation."""


class DataError(RandrepError):
    """Input data is unreadable or inconsistent."""
