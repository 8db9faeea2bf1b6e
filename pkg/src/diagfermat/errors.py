"""Exception types raised across the package."""


class DiagFermatError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(DiagFermatError, ValueError):
    pass


class TooLarge(DiagFermatError, ValueError):
    pass


class DivisionByZero(DiagFermatError, ZeroDivisionError):
    pass


class OrderMismatch(DiagFermatError, ValueError):
    """The exponent ell does not divide q - 1 (or is not prime)."""


class FieldMismatch(DiagFermatError, ValueError):
    pass


class DegenerateCurve(DiagFermatError, ValueError):
    pass


class RoundingBudgetExceeded(DiagFermatError, ArithmeticError):
    """A floating-point character sum did not land close enough to an integer."""


class Unsupported(DiagFermatError, ValueError):
    pass


class WrongCount(DiagFermatError, ValueError):
    pass


class CongruenceViolation(DiagFermatError, ValueError):
    pass


class SingularMatrix(DiagFermatError, ArithmeticError):
    pass


class EmptyPairSet(DiagFermatError, ValueError):
    pass
