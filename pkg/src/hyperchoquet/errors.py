"""Exception hierarchy.

Every error raised on a violated precondition derives from
:class:`PreconditionError`, which the CLI maps to exit code 3.
"""


class HyperChoquetError(Exception):
    """Base class for all library errors."""


class PreconditionError(HyperChoquetError, ValueError):
    pass


class TooLarge(PreconditionError):
    pass


class FamilyTooLargeForEnumeration(TooLarge):
    pass


class ElementOutOfRange(PreconditionError):
    pass


class MissingUniverseSet(PreconditionError):
    pass


class MissingEmptySet(PreconditionError):
    pass


class NotComplementClosed(PreconditionError):
    pass


class NotMonotone(PreconditionError):
    def __init__(self, smaller, larger, message=None):
        self.pair = (smaller, larger)
        super().__init__(message or f"not monotone on pair {smaller!r} <= {larger!r}")


class EmptyNotZero(PreconditionError):
    pass


class TotalMassZero(PreconditionError):
    pass


class InfiniteTotalMass(PreconditionError):
    pass


class NotCapacity(PreconditionError):
    pass


class ShapeMismatch(PreconditionError):
    pass


class IllegalConditionalSet(PreconditionError):
    pass


class NonzeroAtX(PreconditionError):
    pass


class FnExceedsYbar(PreconditionError):
    pass


class NotIdempotent(PreconditionError):
    pass


class DominanceViolated(PreconditionError):
    pass


class EmptyAtom(PreconditionError):
    pass


class SchemaError(HyperChoquetError):
    """A problem document does not match the input schema (CLI exit 2)."""


class CrossCheckError(HyperChoquetError):
    """Two independent computations of the same quantity disagree (CLI exit 4)."""
