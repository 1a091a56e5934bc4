"""Exception hierarchy shared across the toolkit."""


class NumericError(Exception):
    """Base class for numerical failures (series, quadrature, conditioning)."""


class PoleError(NumericError):
    """A function was evaluated at (or a series hit) a pole of a Gamma factor."""


class ConvergenceError(NumericError):
    """A summation or refinement hit its budget without meeting tolerance."""


class IllConditionedError(NumericError):
    """A moment/Hankel construction lost too much precision to be trusted."""
