"""Exception types shared across the library.

Every failure mode that a caller can act on gets its own class; nothing is
ever reported through a silently degraded return value.
"""

from __future__ import annotations


class PantonumError(Exception):
    """Base class for all library-specific failures."""


class BudgetExceededError(PantonumError):
    """A configured resource limit (term count or integer bit size) was hit.

    Raised instead of returning a value whose certificate could not be
    completed within budget.
    """

    def __init__(self, message: str, *, terms: int | None = None,
                 bits: int | None = None):
        super().__init__(message)
        self.terms = terms
        self.bits = bits


class SignIndeterminateError(PantonumError):
    """The work budget ran out with 0 still inside the certified interval.

    Carries the last interval so callers can inspect how close the call was.
    """

    def __init__(self, message: str, interval=None):
        super().__init__(message)
        self.interval = interval


class BlowUpError(PantonumError):
    """The ODE solution norm crossed the overflow guard (finite-time blow-up).

    For classical (undelayed) Riccati dynamics this is the expected outcome,
    so the blow-up time is part of the payload.
    """

    def __init__(self, message: str, time: float, norm: float):
        super().__init__(message)
        self.time = time
        self.norm = norm


class StepSizeError(PantonumError):
    """Adaptive stepping was forced below the minimum admissible step."""

    def __init__(self, message: str, time: float):
        super().__init__(message)
        self.time = time


class InconclusiveError(PantonumError):
    """A certified check could not decide either way (e.g. truncation tail
    not dominated on a contour); retry with more resolution."""


class QuadratureError(PantonumError):
    """Panel refinement hit its limit before the quadrature stabilized."""


class DatumRejectedError(PantonumError):
    """An initial datum failed the transform-decay hypotheses."""
