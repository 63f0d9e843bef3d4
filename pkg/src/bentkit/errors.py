"""Exception hierarchy shared by all bentkit modules."""


class BentkitError(Exception):
    """Base class for every error raised on purpose by bentkit."""


class CapacityError(BentkitError, ValueError):
    pass


class DimensionMismatch(BentkitError, ValueError):
    pass


class ParseError(BentkitError, ValueError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SpectrumNotBoolean(BentkitError, ValueError):
    """The inverse transform of a spectrum is not a +-1 sequence.

    ``index`` is the first input point whose reconstructed value is not +-1.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class DualNotAtBentDistance(SpectrumNotBoolean):
    pass


class DualWeightError(BentkitError, ValueError):
    pass


class NotPlateauedOrBent(BentkitError, ValueError):
    pass


class VNotInSupport(BentkitError, ValueError):
    pass


class SizeNotPowerOfTwo(BentkitError, ValueError):
    pass


class RowOutOfRange(BentkitError, IndexError):
    pass


class RecursionViolated(BentkitError, ValueError):
    pass


class VInsideE(BentkitError, ValueError):
    pass


class HeightMismatch(BentkitError, ValueError):
    pass


class ArityMismatch(BentkitError, ValueError):
    pass


class PreconditionFailed(BentkitError, ValueError):
    """A construction's hypothesis does not hold for the given inputs.

    ``witness`` carries whatever identifies the failure (a function name,
    a point, a ``(v, u)`` pair ...).
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SupportNotSplittable(PreconditionFailed):
    pass


class ModeConditionFailed(PreconditionFailed):
    pass


class SupportsNotLinear(PreconditionFailed):
    pass


class NotDirectSum(PreconditionFailed):
    pass


class NegativeT(PreconditionFailed):
    pass


class EqualDirections(BentkitError, ValueError):
    pass


class OddArity(BentkitError, ValueError):
    pass


class LengthMismatch(BentkitError, ValueError):
    pass


class InvariantBreach(BentkitError, AssertionError):
    """An internal identity that must always hold was violated."""


class RepeatedSupportPoint(BentkitError, ValueError):
    """Two rows of an explicitly ordered support coincide."""
