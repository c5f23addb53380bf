"""Exception types shared across the package."""


class DiscplaneError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DiscplaneError):
    """Malformed scalar or vector text."""


class UndecidableComparison(DiscplaneError):
    """Interval comparison hit the precision cap without separating.

    The caller must supply an exact (rational or algebraic) representation
    to make the comparison decidable.
    """

    def __init__(self, message, bits=None):
        super().__init__(message)
        self.bits = bits


class UnsupportedScalar(DiscplaneError):
    """Operation not defined for this scalar backend (e.g. dimension of an interval)."""


class IncommensurableInputs(DiscplaneError):
    """gcd requested for values spanning a Q-vector space of dimension > 1."""


class FieldDegreeError(DiscplaneError):
    """The requested number field exceeds the supported degree cap."""


class NotSorted(DiscplaneError):
    """Vector is not in the sorted nonnegative cone."""


class ZeroVector(DiscplaneError):
    """Operation requires a nonzero vector."""


class NotUnimodular(DiscplaneError):
    """Substitution incidence matrix has |det| != 1."""


class ExpansionTooShort(DiscplaneError):
    """The expansion halted before the requested depth."""

    def __init__(self, message, halted_at=None):
        super().__init__(message)
        self.halted_at = halted_at


class WindowTooLarge(DiscplaneError):
    """Enumeration window exceeds the candidate-point cap."""


class WindowTooSmall(DiscplaneError):
    """Ambient window does not leave enough margin around the pattern."""


class BudgetExhaustedError(DiscplaneError):
    """Iteration budget ran out; carries partial bounds when available."""

    def __init__(self, message, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class InternalInconsistency(DiscplaneError):
    """A property the theory guarantees failed to hold; indicates a bug or bad input."""
