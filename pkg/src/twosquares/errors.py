"""Exception types shared across the package."""


class TwoSquaresError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TwoSquaresError):
    """Syntax error with a byte offset and the set of expected tokens."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += " (expected: " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class InstantiationError(TwoSquaresError):
    """Schema instantiation failed: missing binding or reserved target."""


class SemanticsError(TwoSquaresError):
    """Formula and semantics do not match (wrong copula family, unknown term,
    model/reading mismatch, or an empty universe where one is disallowed)."""


class BoundError(TwoSquaresError):
    """A search or enumeration bound was exceeded."""
