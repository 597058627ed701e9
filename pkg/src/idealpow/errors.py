"""Exception types raised across the package."""


class IdealPowError(Exception):
    """Base class for every error raised by idealpow."""


class NotPrime(IdealPowError, ValueError):
    pass


class BoundExceeded(IdealPowError, ValueError):
    pass


class ModulusMismatch(IdealPowError, ValueError):
    pass


class NonInvertible(IdealPowError, ZeroDivisionError):
    pass


class DivisionByZero(IdealPowError, ZeroDivisionError):
    pass


class BothZero(IdealPowError, ValueError):
    pass


class ParseError(IdealPowError, ValueError):
    def __init__(self, offset: int, message: str):
        self.offset = offset
        self.message = message
        super().__init__(f"at offset {offset}: {message}")


class InvalidCurve(IdealPowError, ValueError):
    pass


class IdealInvariantViolated(IdealPowError, ValueError):
    pass


class ZeroQ(IdealPowError, ValueError):
    pass


class CurveMismatch(IdealPowError, ValueError):
    pass


class NonCoprime(IdealPowError, ValueError):
    """The closed-form power recursion does not apply to this ideal."""


class ExponentOutOfRange(IdealPowError, ValueError):
    pass


class InternalOracleError(IdealPowError, RuntimeError):
    """An exact division inside an HNF oracle failed. Always a bug."""


class NoPointFound(IdealPowError, LookupError):
    pass


class InvalidDiscriminant(IdealPowError, ValueError):
    pass


class DiscriminantMismatch(IdealPowError, ValueError):
    pass


class NoIdealFound(IdealPowError, LookupError):
    pass
