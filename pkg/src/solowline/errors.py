"""Exception types shared across the package."""


class SolowLineError(Exception):
    """Base class for all package errors."""


class ArgumentError(SolowLineError, ValueError):
    """Invalid argument combination (k out of range, empty interval, ...)."""


class DomainError(SolowLineError, ValueError):
    """Input outside the domain of a closed-form expression."""


class SingularMatrix(SolowLineError, ArithmeticError):
    """The similarity matrix could not be factored with an acceptable pivot."""


class DegenerateTriple(SolowLineError, ArithmeticError):
    """Three-point similarity matrix with (numerically) vanishing determinant."""


class InstanceTooLarge(SolowLineError, ValueError):
    """Brute-force enumeration refused because the instance is too big."""


class NotOrdered(SolowLineError, ValueError):
    """A coordinate of a curve sample is not monotone in the given order."""

    def __init__(self, message: str, coordinate: int | None = None, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.coordinate = coordinate
        self.pair = pair


class ParseError(SolowLineError, ValueError):
    """Malformed CSV / JSON input; carries 1-based row and column when known."""

    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        loc = []
        if row is not None:
            loc.append(f"row {row}")
        if column is not None:
            loc.append(f"column {column}")
        super().__init__(f"{message} ({', '.join(loc)})" if loc else message)
        self.row = row
        self.column = column


class GoldenMismatch(SolowLineError):
    """A reproduced quantity disagrees with its reference value."""

    def __init__(self, quantity: str, expected, actual):
        super().__init__(f"golden mismatch for {quantity}: expected {expected!r}, got {actual!r}")
        self.quantity = quantity
        self.expected = expected
        self.actual = actual


class DuplicateCollapsed(UserWarning):
    """Consecutive curve samples at zero l1 distance were merged."""
