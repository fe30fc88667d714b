"""Exception types shared across the package."""
from __future__ import annotations


class QLSError(ValueError):
    """Base class for every error raised by this package."""


class DivisionByZero(QLSError, ZeroDivisionError):
    pass


class ParseError(QLSError):
    def __init__(self, message: str, position: int | None = None, *, text: str | None = None,
                 line: int | None = None, column: int | None = None, where: str | None = None):
        self.message = message
        self.position = position
        self.text = text
        self.line = line
        self.column = column
        self.where = where
        parts = [message]
        if position is not None:
            parts.append(f"at position {position}")
        if text is not None:
            parts.append(f"in {text!r}")
        if where:
            parts.append(f"({where})")
        if line is not None:
            parts.append(f"[line {line}, column {column}]")
        super().__init__(" ".join(parts))


class SchemaError(QLSError):
    pass


class DimensionMismatch(QLSError):
    pass


class NotUnit(QLSError):
    def __init__(self, message: str, cell: tuple[int, int] | None = None):
        self.cell = cell
        super().__init__(message if cell is None else f"{message} at cell {cell}")


class NotOrthogonal(QLSError):
    pass


class ZeroVector(QLSError):
    pass


class IndexOutOfRange(QLSError, IndexError):
    pass


class NotStrictlyOrdered(QLSError):
    pass


class NotLatin(QLSError):
    def __init__(self, message: str, line: tuple[str, int] | None = None):
        self.line = line
        super().__init__(message)


class LayoutInvalid(QLSError):
    pass


class DuplicateEntry(QLSError):
    pass


class InvalidDictionary(QLSError):
    pass


class BudgetExhausted(QLSError):
    """Raised only by callers that want budget exhaustion as an exception."""
