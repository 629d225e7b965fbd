"""Exception hierarchy shared across the package."""

from __future__ import annotations


class BraidposError(Exception):
    """Base class for every error raised by this package."""


class DomainError(BraidposError, ValueError):
    """Input outside an operation's domain (bad index, wrong strand count, ...)."""


class NotAKnotError(DomainError):
    """A knot-only operation was applied to a multi-component closure."""


class ParseError(BraidposError, ValueError):
    """Malformed braid or expression text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ContradictionError(BraidposError):
    """Two rules, or a rule and an assertion, derived incompatible facts."""


class InternalConsistencyError(BraidposError):
    """An exact-arithmetic cross-check failed; indicates a bug, not bad input."""


class InexactDivisionError(BraidposError, ArithmeticError):
    """Laurent-polynomial division left a remainder where none was allowed."""
