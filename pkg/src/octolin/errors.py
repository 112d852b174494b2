"""Exception hierarchy.

Every error raised on bad input derives from :class:`OctolinError`; the
CLI maps :class:`ParseError` and :class:`DimensionError` subclasses to
distinct exit codes.
"""


class OctolinError(Exception):
    """Base class for all package errors."""


class ParseError(OctolinError, ValueError):
    """Input could not be decoded into the expected JSON schema."""


class DimensionError(OctolinError, ValueError):
    """Shapes of the operands are incompatible."""


class LengthMismatch(DimensionError):
    pass


class DimMismatch(DimensionError):
    pass


class NotSquare(DimensionError):
    pass


class TooManyVectors(DimensionError):
    """A weak associative set in O^n has at most n vectors."""


class DomainError(OctolinError, ValueError):
    """Argument lies outside the domain of the operation."""


class NonUnitScalar(DomainError):
    pass


class NotUnit(DomainError):
    pass


class NotWeakAssociative(DomainError):
    pass


class NotIsometry(DomainError):
    pass


class EntryOutsideCJ(DomainError):
    """A decomposed entry does not lie in R + RJ."""


class PageMismatch(DomainError):
    """Loop product of classes living on different C_J pages."""


class KernelNotOSubmodule(DomainError):
    pass
