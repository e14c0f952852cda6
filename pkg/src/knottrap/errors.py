"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class KnotTrapError(Exception):
    """Base class for errors raised by this package."""


class DiagramError(KnotTrapError, ValueError):
    """An invalid link diagram (bad labels, inconsistent orientation, non-planar)."""


class ParseError(DiagramError):
    """Malformed textual input; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SplitDiagramError(DiagramError):
    """The diagram (or the link it presents) is split."""


class PreconditionError(KnotTrapError, ValueError):
    """An operation was called on an input outside its domain."""


class ShapeViolation(KnotTrapError, ValueError):
    """A coefficient sequence is not strictly increasing-constant-decreasing."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (index {index})")
        self.index = index


class BudgetExceeded(KnotTrapError, RuntimeError):
    """A bounded search or recursion hit its configured limit."""
