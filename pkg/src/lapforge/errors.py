"""Exception types shared across the package."""


class LapforgeError(Exception):
    """Base class for all errors raised by lapforge."""


class ParseError(LapforgeError, ValueError):
    """A JSON document does not conform to its schema."""


class PreconditionError(LapforgeError, ValueError):
    """An operation was called on inputs outside its domain."""


class ConvergenceError(LapforgeError, RuntimeError):
    """An iterative numerical method failed to converge."""


class ConsistencyError(LapforgeError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
