"""Exception types raised across the package."""


class SchurposError(ValueError):
    """Base class for all domain errors."""


class SumMismatchError(SchurposError):
    pass


class SizeMismatchError(SchurposError):
    pass


class EmptyPartitionError(SchurposError):
    pass


class BadArityError(SchurposError):
    pass


class BadInputError(SchurposError):
    pass


class PreconditionViolated(SchurposError):
    pass


class BadInterleavingError(SchurposError):
    pass


class NotDistinctError(SchurposError):
    """The swapped sequences repeat an entry, so the inversion identity is vacuous."""


class BoundExceededError(SchurposError):
    pass


class BadRankError(SchurposError):
    pass


class CoefficientOverflowError(SchurposError, OverflowError):
    pass


class PosetViolation(SchurposError):
    """A computed relation failed to be a strict partial order, or two elements tied."""
