"""Exception types shared across the package."""


class PartgenError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(PartgenError):
    """A composition was constructed from an empty part sequence."""


class OrderViolation(PartgenError):
    """Parts break the monotonicity required by the claimed order."""


class DomainError(PartgenError):
    """An argument is outside the function's domain (e.g. m > n)."""


class NoSuccessor(PartgenError):
    """The composition is the last one in its ordering."""


class NotTabulated(PartgenError):
    """A count was requested beyond the table's capacity."""


class CapacityError(PartgenError):
    """Requested table size exceeds the configured memory budget."""


class GuardViolation(PartgenError):
    """n is below the stated validity range of a closed form."""


class AlreadyStarted(PartgenError):
    """An instrumented run handle was used more than once."""


class NotATape(PartgenError):
    """Tape serialization was requested for a run without tape data."""
