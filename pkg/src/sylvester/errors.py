"""Exception hierarchy.

User-facing failures derive from :class:`SylvesterError`.  A failed exact
division is an internal invariant violation and deliberately sits outside
that hierarchy so callers catching user errors never swallow it.
"""


class SylvesterError(Exception):
    """Base class for invalid input or undefined operations."""


class InvalidDimension(SylvesterError, ValueError):
    pass


class IndexOutOfRange(SylvesterError, IndexError):
    pass


class InvalidIndexPair(SylvesterError, ValueError):
    pass


class NotSquare(SylvesterError, ValueError):
    pass


class NotGeneric(SylvesterError, ValueError):
    pass


class UnboundVariable(SylvesterError, KeyError):
    pass


class DimensionTooSmall(SylvesterError, ValueError):
    pass


class DimensionTooLarge(SylvesterError, ValueError):
    pass


class MatrixFormatError(SylvesterError, ValueError):
    """Malformed JSON matrix document."""


class ZeroInteriorMinor(SylvesterError, ArithmeticError):
    """Dodgson condensation hit a zero divisor."""


class PivotBreakdown(SylvesterError, ArithmeticError):
    """Leading minors requested but elimination needs a row swap."""


class ExactDivisionError(RuntimeError):
    """A division that must be exact left a remainder (implementation bug)."""
