"""Exception types shared across the package."""


class CubekitError(Exception):
    """Base class for all library errors."""


class FormatError(CubekitError, ValueError):
    """An input file does not parse.

    Carries the 1-based line number when the failure is tied to a line.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphInputError(CubekitError, ValueError):
    """A graph fails a structural precondition (disconnected, loop, ...)."""


class NotMedianError(CubekitError, ValueError):
    """An operation that needs a median graph was given a non-median one."""


class ValidationError(CubekitError, ValueError):
    """Semantically invalid input (bad polygon, non-convex member, ...)."""


class SizeCapError(CubekitError, RuntimeError):
    """Input exceeds the size cap of an exact computation."""


class ConsistencyError(CubekitError, RuntimeError):
    """An internal cross-check failed; indicates a bug, never bad input."""
