class QSpecDimError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(QSpecDimError, ValueError):
    """Invalid type, rank, weight, or numeric parameter."""


class ResourceError(QSpecDimError):
    """A computation would exceed a configured size cap."""


class NumericError(QSpecDimError, ArithmeticError):
    """Result cannot be trusted at the working precision."""


class DegenerateError(QSpecDimError, ValueError):
    """A coefficient the formula divides by vanishes."""


class BracketError(QSpecDimError, ValueError):
    """An abscissa bracket does not straddle the transition."""
