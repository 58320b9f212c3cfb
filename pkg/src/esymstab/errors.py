"""Exception types shared across the package."""


class EsymError(ValueError):
    """Base class for all domain errors raised by esymstab."""


class OrderMismatch(EsymError):
    pass


class ArityMismatch(EsymError):
    pass


class DegreeOutOfRange(EsymError):
    pass


class ParameterOutOfRange(EsymError):
    pass


class ParameterMismatch(EsymError):
    pass


class NotMonomial(EsymError):
    pass


class Singular(EsymError):
    pass


class NotStabilizer(EsymError):
    pass


class ZeroEntry(EsymError):
    pass


class MalformedShape(EsymError):
    pass


class EntryOutOfRange(EsymError):
    pass


class TooManyRows(EsymError):
    pass


class IndexOutOfRange(EsymError):
    pass


class DimensionMismatch(EsymError):
    pass


class FillingNotSemistandard(EsymError):
    pass


class ExponentNegative(EsymError):
    pass


class ParseError(EsymError):
    """Raised on malformed expression text; ``position`` is 1-based."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
