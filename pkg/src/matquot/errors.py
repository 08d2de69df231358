"""Exception types shared across the package."""


class MatquotError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(MatquotError):
    """Operands have incompatible shapes."""


class DivisionByZero(MatquotError):
    """Exact division with a zero divisor."""


class NotDivisible(MatquotError):
    """Exact division requested for a non-multiple."""


class NotSolvable(MatquotError):
    """A solution set was requested for an unsolvable equation."""


class TooLarge(MatquotError):
    """An enumeration would exceed the configured state ceiling."""


class ReductionInvariantError(MatquotError):
    """An internal consistency check of a computed decomposition failed."""


class MatrixParseError(MatquotError):
    """Malformed matrix file; carries the offending position."""

    def __init__(self, message: str, source: str = "<input>", line: int = 0, col: int = 0):
        super().__init__(message)
        self.message = message
        self.source = source
        self.line = line
        self.col = col

    def __str__(self) -> str:
        return f"{self.source}:{self.line}:{self.col}: {self.message}"
