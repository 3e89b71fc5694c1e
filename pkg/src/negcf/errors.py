"""Exception types shared across the package."""


class NegcfError(Exception):
    """Base class for all library errors."""


class NonSquareFree(NegcfError, ValueError):
    """The radicand d is not a square-free positive integer."""


class ZeroDenominator(NegcfError, ZeroDivisionError):
    """A surd was constructed with denominator zero."""


class DivideByZero(NegcfError, ZeroDivisionError):
    """Division by an exactly-zero value."""


class MixedFields(NegcfError, ValueError):
    """Two irrational surds from different quadratic fields were combined."""


class RationalInput(NegcfError, ValueError):
    """A rational number was given where an irrational is required."""


class OutOfRange(NegcfError, ValueError):
    """Input outside the open interval (0, 1) or another documented range."""


class NoPeriod(NegcfError, ValueError):
    """The operation needs a periodic expansion but none is available."""


class InsufficientDigits(NegcfError, ValueError):
    """More expansion or digit terms are needed than were supplied."""


class LengthMismatch(NegcfError, ValueError):
    """Digit sequence and expansion are not aligned."""


class InvalidDigits(NegcfError, ValueError):
    """A digit sequence violates the range, parity, or block constraints."""


class LatticePoint(NegcfError, ValueError):
    """gamma lies in Z + Z*alpha, where the approximation constant degenerates."""


class PrecisionExhausted(NegcfError, ArithmeticError):
    """The requested result cannot be certified at the available precision."""


class PrecisionBudgetExceeded(NegcfError, ArithmeticError):
    """Input precision is too low for the requested scan range."""


class RTooSmall(NegcfError, ValueError):
    """The liminf parameter R must be at least 3."""


class RNotOdd(NegcfError, ValueError):
    """An odd R is required."""


class LimsupBelowLiminf(NegcfError, ValueError):
    """The limsup parameter r must be at least R."""
