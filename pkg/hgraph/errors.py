"""
Error types shared by every package.

All library errors derive from SkeletalError so the CLI can map them to exit codes
in one place. Input-validation errors also derive from ValueError.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional


class SkeletalError(Exception):
    """Base class for all library errors."""


class ArgumentError(SkeletalError, ValueError):
    """A parameter is outside its documented range."""


class SizeError(SkeletalError, ValueError):
    """A partial edge is too large for the requested operation."""


class UniformityError(SkeletalError, ValueError):
    """Pattern and host have different uniformity."""


class LayoutError(SkeletalError, ValueError):
    """A partite layout is missing or inconsistent."""


class ColoringError(SkeletalError, ValueError):
    """A vertex coloring is not proper for the operation."""


class SetupError(SkeletalError, ValueError):
    """An embedding setup violates one of its conditions."""


class DegeneracyError(SkeletalError, ValueError):
    """The supplied degeneracy bound is below the actual skeletal degeneracy."""


class PreconditionError(SkeletalError, ValueError):
    """A documented precondition does not hold."""


class InvariantViolation(SkeletalError, RuntimeError):
    """A post-hoc self check disagreed with the constructor that produced the value."""


class BudgetExceeded(SkeletalError):
    """A search or enumeration went over its budget. `best` holds the partial result."""

    def __init__(self, message: str, best: Any = None):
        super().__init__(message)
        self.best = best


class StageFailed(SkeletalError):
    """
    A randomized stage used up its retry budget.

    `stage` names the step that broke, `diagnostics` is a JSON-friendly dict and
    `trace` is the best partial result seen, if any.
    """

    def __init__(
        self,
        stage: str,
        reason: str,
        diagnostics: Optional[Dict[str, Any]] = None,
        trace: Any = None,
    ):
        super().__init__(f"{stage}: {reason}")
        self.stage = stage
        self.reason = reason
        self.diagnostics = diagnostics or {}
        self.trace = trace

    def to_payload(self) -> Dict[str, Any]:
        return {
            "status": "failed",
            "stage": self.stage,
            "reason": self.reason,
            "diagnostics": self.diagnostics,
        }


class FormatError(SkeletalError, ValueError):
    """A hypergraph or coloring file was rejected."""

    def __init__(self, message: str, diagnostics: Optional[List[Any]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or []
