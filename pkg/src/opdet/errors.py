"""Exception hierarchy shared by every opdet module."""

from __future__ import annotations


class OpdetError(ValueError):
    """Base class for all input and domain errors raised by opdet."""


class ArityError(OpdetError):
    pass


class NonSquareError(OpdetError):
    pass


class InsufficientMomentsError(OpdetError):
    """A finite moment list does not reach the order an operation needs."""

    def __init__(self, required: int, available: int):
        self.required = required
        self.available = available
        super().__init__(
            f"insufficient moments: need moment index {required}, "
            f"only 0..{available} available"
        )


class DegenerateMeasureError(OpdetError):
    pass


class DuplicateNodesError(OpdetError):
    pass


class MalformedPlanError(OpdetError):
    pass


class UnsupportedSpecError(OpdetError):
    pass


class PlanInfeasibleError(OpdetError):
    pass
