"""Exception hierarchy shared by all modules."""


class PathwayEntropyError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(PathwayEntropyError, ValueError):
    """A parameter lies outside the range where the formula is defined."""


class DomainError(PathwayEntropyError, ValueError):
    """The evaluation point lies outside the supported domain."""


class DataError(PathwayEntropyError, ValueError):
    """Input data is malformed, degenerate or insufficient."""


class NonConvergenceError(PathwayEntropyError, ArithmeticError):
    """A series or quadrature failed to reach the requested tolerance."""
