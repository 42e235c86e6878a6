"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LeibalgError(Exception):
    """Base class for all errors raised by leibalg."""


class DimensionMismatch(LeibalgError, ValueError):
    pass


class AmbientMismatch(LeibalgError, ValueError):
    """Objects anchored in different algebras were combined."""


class NotAnIdeal(LeibalgError, ValueError):
    def __init__(self, message: str = "subspace is not a two-sided ideal", index: int | None = None):
        super().__init__(message)
        self.index = index


class NotASubalgebra(LeibalgError, ValueError):
    pass


class NotAscending(LeibalgError, ValueError):
    def __init__(self, index: int):
        super().__init__(f"chain term {index} is not contained in term {index + 1}")
        self.index = index


class BadDimension(LeibalgError, ValueError):
    pass


class NotSplitExtension(LeibalgError, ValueError):
    pass


class HomomorphismCheckFailed(LeibalgError):
    """theta failed the derivation or bracket-compatibility check."""


class NotCentralDerivation(LeibalgError, ValueError):
    pass


class LeibnizViolation(LeibalgError):
    def __init__(self, message: str, triple: tuple[int, int, int] | None = None):
        super().__init__(message)
        self.triple = triple


class ParseError(LeibalgError, ValueError):
    """Malformed algebra document; carries a 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class DuplicateEntry(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass
