"""Exception types shared across the package."""


class CoprimeLabError(Exception):
    """Base class for all library errors."""


class DomainError(CoprimeLabError, ValueError):
    """An argument is outside the documented domain of an operation."""


class ResourceLimitError(CoprimeLabError, RuntimeError):
    """A computation would exceed a configured scan/memory/enumeration budget."""


class NonconvergenceError(CoprimeLabError, RuntimeError):
    """An iterative construction exhausted its restart guard.

    The constructions used here are mathematically guaranteed to terminate,
    so hitting this indicates a bug, not bad luck.
    """


class CacheFormatError(CoprimeLabError, ValueError):
    """A cache file row failed parsing or validation."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
