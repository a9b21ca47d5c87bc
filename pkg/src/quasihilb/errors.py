"""Exception hierarchy shared by every module of the package."""


class QuasiHilbError(Exception):
    """Base class for all errors raised by quasihilb."""


class ZeroDivisor(QuasiHilbError, ZeroDivisionError):
    pass


class InvalidGenFun(QuasiHilbError, ValueError):
    pass


class ZeroNumerator(InvalidGenFun):
    pass


class ExponentOutOfRange(QuasiHilbError, ValueError):
    pass


class NotEnoughSamples(QuasiHilbError, ValueError):
    pass


class EmptyClass(QuasiHilbError, ValueError):
    """Raised when an operation needs a nonzero numerator class U_i."""


class TheoremViolation(QuasiHilbError, AssertionError):
    """An exact consequence of the root theorems failed to hold.

    This should never be raised on valid input; if it is, either the
    arithmetic or the theory is wrong and the instance is worth keeping.
    """


class RootFindingDiverged(QuasiHilbError, ArithmeticError):
    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class RootAtOneForbidden(QuasiHilbError, ValueError):
    pass


class IrrationalCoefficients(QuasiHilbError, ValueError):
    pass


class ParseError(QuasiHilbError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
