"""Exception types shared across the package."""

from __future__ import annotations


class CommuterError(Exception):
    """Base class for every error raised by this package."""


class SignatureError(CommuterError):
    """A name fails to resolve, clashes, or violates declaration rules."""


class TypingError(CommuterError):
    """Boundary words do not line up.

    ``slice_index`` points at the offending slice when the mismatch was
    detected inside a diagram, and is ``None`` for boundary-level mismatches
    (composition, rule construction).
    """

    def __init__(self, message: str, slice_index: int | None = None):
        super().__init__(message)
        self.slice_index = slice_index


class NotSwappableError(CommuterError):
    """Two consecutive slices interfere and cannot be exchanged."""


class BudgetError(CommuterError):
    """An enumeration exceeded its configured cap.

    ``count_at_least`` is a lower bound on the true count at the moment the
    enumeration was abandoned.
    """

    def __init__(self, message: str, count_at_least: int):
        super().__init__(message)
        self.count_at_least = count_at_least


class MatchInvalidError(CommuterError):
    """A match does not (or no longer does) apply to the given diagram."""


class SearchExhausted(CommuterError):
    """Proof search ran out of budget.

    This is a resource failure, not a disproof: the two diagrams may still be
    equal under the given rules.
    """

    def __init__(
        self,
        message: str,
        *,
        nodes: int,
        depth_left: int,
        depth_right: int,
        frontier_left: int,
        frontier_right: int,
    ):
        super().__init__(message)
        self.nodes = nodes
        self.depth_left = depth_left
        self.depth_right = depth_right
        self.frontier_left = frontier_left
        self.frontier_right = frontier_right

    def stats(self) -> dict[str, int]:
        return {
            "nodes": self.nodes,
            "depth_left": self.depth_left,
            "depth_right": self.depth_right,
            "frontier_left": self.frontier_left,
            "frontier_right": self.frontier_right,
        }


class SizeError(CommuterError):
    """A finite model would exceed the configured size bound."""


class NumericError(CommuterError):
    """A numerical routine met an ill-conditioned or singular input."""


class ParseError(CommuterError):
    """Source text was rejected; carries position and expectations."""

    def __init__(self, message: str, line: int, col: int, expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.line = line
        self.col = col
        self.expected = expected

    def __str__(self) -> str:
        base = f"{self.line}:{self.col}: {self.args[0]}"
        if self.expected:
            base += " (expected " + ", ".join(self.expected) + ")"
        return base
