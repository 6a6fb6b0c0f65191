"""Exception hierarchy shared by the engine and the CLI."""


class InterlinkError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(InterlinkError, ValueError):
    """A physical parameter is outside its admissible range."""


class ConfigurationError(InterlinkError):
    """A run configuration (flags, config file, axis spec) is inconsistent."""


class DataError(InterlinkError):
    """An input or output data file cannot be read, parsed, or written."""
