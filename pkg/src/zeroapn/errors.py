"""Exception hierarchy shared by every module of the package."""


class ZeroApnError(Exception):
    """Base class for all errors raised by zeroapn."""


class FieldError(ZeroApnError, ValueError):
    pass


class NonIrreducibleModulus(FieldError):
    pass


class DegreeMismatch(FieldError):
    pass


class UnsupportedDegree(FieldError):
    pass


class DivisionByZero(ZeroApnError, ZeroDivisionError):
    pass


class PolynomialError(ZeroApnError, ValueError):
    pass


class BothZero(PolynomialError):
    pass


class ConstantPolynomial(PolynomialError):
    pass


class ZeroPolynomial(PolynomialError):
    pass


class PolySyntaxError(PolynomialError):
    pass


class UnknownVariable(PolySyntaxError):
    pass


class MissingVariable(PolynomialError):
    pass


class DegreeZeroInVariable(PolynomialError):
    pass


class LeadingCoefficientVanished(PolynomialError):
    pass


class InexactDivision(PolynomialError):
    pass


class ZeroDirection(ZeroApnError, ValueError):
    pass


class FieldTooLarge(ZeroApnError, ValueError):
    pass


class InvalidExponent(ZeroApnError, ValueError):
    pass


class ExponentOutOfRange(InvalidExponent):
    pass


class ConstraintViolated(ZeroApnError, ValueError):
    def __init__(self, family, m, constraint):
        super().__init__(f"family {family}: m={m} violates {constraint}")
        self.family = family
        self.m = m
        self.constraint = constraint


class MTooSmall(ZeroApnError, ValueError):
    pass


class NotApplicable(ZeroApnError, ValueError):
    pass


class UnknownTheorem(ZeroApnError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown theorem"


class TranscriptionMissing(UnknownTheorem):
    """The proof case exists but its system is not printed in the source."""


class CatalogError(ZeroApnError, ValueError):
    pass
