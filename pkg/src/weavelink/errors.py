"""Exception types raised across the package."""


class WeaveError(Exception):
    """Base class for every error raised by weavelink."""


class NonExactDivision(WeaveError, ArithmeticError):
    pass


class ZeroDenominator(WeaveError, ZeroDivisionError):
    pass


class NonUnitPoint(WeaveError, ValueError):
    pass


class ZeroPolynomial(WeaveError, ValueError):
    pass


class ZeroExponent(WeaveError, ValueError):
    pass


class BraidSyntaxError(WeaveError, ValueError):
    pass


class InternalMismatch(WeaveError, RuntimeError):
    """Two independent computations of the same quantity disagree."""


class NoConvergence(WeaveError, RuntimeError):
    pass
