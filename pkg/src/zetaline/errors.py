"""Exception hierarchy.

Exit-code mapping used by the CLI: usage errors are 1, flagged
inconsistencies 2, precondition violations 3, accuracy failures 4.
"""

from __future__ import annotations


class ZetalineError(Exception):
    """Base class for all toolkit errors."""


class DomainError(ZetalineError):
    """A precondition on the inputs was violated."""


class PoleError(DomainError):
    """Evaluation requested at a pole of the function."""


class InvalidBracketError(DomainError):
    """Bracket endpoints do not straddle a sign change."""


class ConfigError(ZetalineError):
    """Configuration values are invalid or insufficient for the request."""


class AccuracyError(ZetalineError):
    """A computation could not meet its accuracy target."""


class OnPathZeroError(ZetalineError):
    """The tracked function vanished at a sample on the path."""

    def __init__(self, message: str, point: complex | None = None):
        super().__init__(message)
        self.point = point


class ResolutionError(ZetalineError):
    """Adaptive refinement exhausted its depth budget.

    Signals a zero adjacent to (or on) the tracked path: phase jumps
    never settle below the pi/2 threshold no matter how small the step.
    """

    def __init__(self, message: str, point: complex | None = None):
        super().__init__(message)
        self.point = point


class OrdinateCollisionError(DomainError):
    """A height T coincides with a zero ordinate within the guard band."""

    def __init__(self, message: str, gamma: float):
        super().__init__(message)
        self.gamma = gamma


class InconsistencyError(ZetalineError):
    """Independent counts or checks disagree; refusing to proceed."""


class UsageError(ZetalineError):
    """Command-line arguments are malformed or incomplete."""
