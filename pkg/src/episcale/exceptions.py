"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes (config -> 2, data -> 3, numeric -> 4),
so new error categories should subclass one of the three roots below.
"""


class EpiscaleError(Exception):
    """Base class for all package errors."""


class ConfigError(EpiscaleError, ValueError):
    """Invalid or inconsistent run configuration."""


class DataError(EpiscaleError, ValueError):
    """Problems with input data (schema, format, indexing, state)."""


class SchemaError(DataError):
    """A required column or field is missing."""


class FormatError(DataError):
    """Malformed values, e.g. a non-monotone date header."""


class LocationError(DataError):
    """Inconsistent location metadata (unknown state, duplicate FIPS...)."""


class PanelStateError(DataError):
    """Operation applied to a panel in the wrong normalization state."""


class ScenarioError(DataError):
    """Invalid synthetic scenario definition."""


class ShapeError(EpiscaleError, ValueError):
    """Tensor or matrix shape mismatch between model pieces."""


class NumericError(EpiscaleError, RuntimeError):
    """Non-finite values encountered in a numeric stage."""

    def __init__(self, stage, message=None):
        self.stage = stage
        super().__init__(message or f"non-finite values in stage '{stage}'")


class DivergenceError(NumericError):
    """Training loss became non-finite."""
