"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, DataError -> 3,
NumericError -> 4.
"""


class LangshiftError(Exception):
    """Base class for all langshift errors."""


class ConfigError(LangshiftError):
    """Invalid or unresolvable run configuration."""


class DataError(LangshiftError):
    """Unreadable, malformed, or inconsistent input data."""


class NumericError(LangshiftError):
    """Invalid numeric input to a statistics routine."""
