"""Exception types raised across the package."""


class ACLabError(Exception):
    """Base class for all errors raised by aclab."""


class OrderCapExceeded(ACLabError):
    pass


class InvalidPermutation(ACLabError, ValueError):
    pass


class UnknownSpec(ACLabError, ValueError):
    pass


class NotNormal(ACLabError, ValueError):
    pass


class SearchBudgetExceeded(ACLabError):
    pass


class NotAbelian(ACLabError, ValueError):
    pass


class VectorTooShort(ACLabError, ValueError):
    pass


class NotGenerating(ACLabError, ValueError):
    pass


class LengthMismatch(ACLabError, ValueError):
    pass


class StateCapExceeded(ACLabError):
    pass


class NotNormallyGenerating(ACLabError, ValueError):
    pass


class WeightTooLarge(ACLabError, ValueError):
    pass


class WeightNotOne(ACLabError, ValueError):
    pass


class RangeError(ACLabError, ValueError):
    pass


class NotCoprime(ACLabError, ValueError):
    pass


class NotPrimePower(ACLabError, ValueError):
    pass


class AlphaNotUnit(ACLabError, ValueError):
    pass


class SizeCapExceeded(ACLabError):
    pass


class ParseError(ACLabError, ValueError):
    """Group-spec syntax error carrying a 1-based source position."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
