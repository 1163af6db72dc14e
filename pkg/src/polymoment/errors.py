"""Exception classes shared across the package."""


class PolyMomentError(Exception):
    """Base class for every domain error raised by polymoment."""


class InvalidDegreeError(PolyMomentError, ValueError):
    """A requested factor degree does not divide the polynomial degree."""


class NotInvertibleError(PolyMomentError, ZeroDivisionError):
    """A number-field element shares a factor with the modulus."""


class DenominatorMismatchError(PolyMomentError, ValueError):
    """A Chebyshev node was embedded into the field of another denominator."""


class HypothesisError(PolyMomentError, ValueError):
    """Input data violates the hypotheses of the theorem being applied."""


class ConsistencyError(PolyMomentError, RuntimeError):
    """An existence guaranteed by theory was not found for the given data."""


class ClassificationError(PolyMomentError, RuntimeError):
    """No normal form could be extracted for the given data."""


class EndpointError(PolyMomentError, ValueError):
    """Endpoints are of mixed kind, equal, or fail a required relation."""


class NotReducibleError(PolyMomentError, ValueError):
    """A reducibility certificate could not be issued.

    ``condition`` names the failed requirement: ``"P"``, ``"Q"`` or
    ``"endpoints"``.
    """

    def __init__(self, condition, message):
        super().__init__(message)
        self.condition = condition


class ParseError(PolyMomentError, ValueError):
    """Syntax error in a polynomial expression, located by byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ParseWarning(UserWarning):
    """Suspicious but legal expression, e.g. composition with a constant."""


class ConsistencyWarning(UserWarning):
    """A result contradicts a theoretical bound without invalidating it."""
