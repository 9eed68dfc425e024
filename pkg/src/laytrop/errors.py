"""Exception types shared across the package."""


class LaytropError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LaytropError):
    """An operand lies outside the domain of an operation.

    Covers flavor mismatches, undefined valuations of the zero series,
    arity mismatches, order violations of transition maps, and empty
    collections where a non-empty one is required.
    """


class ParseError(LaytropError):
    """Malformed expression text; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UsageError(LaytropError):
    """Invalid command-line flags or invocation shape."""
