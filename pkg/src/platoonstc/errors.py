"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Raised when a configuration value is missing, malformed or out of range."""


class NumericalError(RuntimeError):
    """Raised when a numerical routine diverges or produces non-finite values."""


class SchedulingError(RuntimeError):
    """Raised when a held quantity is queried outside its validity interval."""
