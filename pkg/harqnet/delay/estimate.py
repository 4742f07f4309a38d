import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional


class DelayKind(str, Enum):
    ANALYTIC_APPROX = "analytic_approx"
    LOWER_BOUND = "lower_bound"
    UPPER_BOUND = "upper_bound"
    MONTE_CARLO = "monte_carlo"


class UnboundedDelayError(ValueError):
    """The mean transmission delay is infinite for the given parameters."""


@dataclass(frozen=True)
class DelayEstimate:
    """Mean transmission delay in slots.

    ci_halfwidth, censored, trials and reliable are only set by the Monte
    Carlo estimators. Lower bounds may fall below one slot; every other
    estimate needs at least one slot.
    """

    value: float
    kind: DelayKind
    ci_halfwidth: Optional[float] = None
    censored: int = 0
    trials: int = 0
    reliable: bool = True

    def __post_init__(self):
        if math.isnan(self.value) or self.value <= 0:
            raise ValueError(f"Delay must be positive, got {self.value}")
        if self.kind is not DelayKind.LOWER_BOUND and self.value < 1.0 - 1e-12:
            raise ValueError(f"A {self.kind.value} delay below one slot: {self.value}")

    def scaled(
        self, factor: float, kind: Optional[DelayKind] = None
    ) -> "DelayEstimate":
        return DelayEstimate(
            value=self.value * factor,
            kind=kind or self.kind,
            ci_halfwidth=None
            if self.ci_halfwidth is None
            else self.ci_halfwidth * factor,
            censored=self.censored,
            trials=self.trials,
            reliable=self.reliable,
        )
