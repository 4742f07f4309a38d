from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class SimConfig(BaseModel, extra="forbid", frozen=True):  # type: ignore
    disk_radius: Optional[float] = Field(
        default=None,
        gt=0,
        description="""Radius in meters of the simulated disk around the typical
receiver.

When unset, the smallest radius for which the interferers outside the disk
change the conditional success probability by less than edge_tolerance, to
first order, is used (desk scale). The full-scale setting is 10000.
""",
    )
    trials: int = Field(
        default=2000,
        ge=1,
        description="Number of network realizations (40000 at full scale).",
    )
    fading_draws_per_realization: int = Field(
        default=200,
        ge=1,
        description="Number M of fading and activity draws per realization used "
        "to estimate conditional success probabilities.",
    )
    retransmission_cap: int = Field(
        default=10_000,
        ge=1,
        description="Maximum number of slots simulated per trace before the "
        "trace is censored.",
    )
    seed: Optional[int] = Field(
        default=None,
        ge=0,
        lt=2**64,
        description="Seed of the experiment. Every trial derives its own random "
        "stream from (seed, trial index). When unset, the HARQNET_SEED environment "
        "variable is used, and a random seed is drawn if that is unset too.",
    )
    q_floor: Optional[float] = Field(
        default=None,
        gt=0,
        lt=1,
        description="Floor applied to conditional success probabilities before "
        "inverting them. Defaults to 1/(2M).",
    )
    edge_tolerance: float = Field(
        default=1e-2,
        gt=0,
        lt=1,
        description="Relative error on the conditional success probability "
        "allowed for the interferers left out of the disk when disk_radius is "
        "unset.",
    )
    gain_model: Literal["marginal", "matrix"] = Field(
        default="marginal",
        description="""How zero-forcing post-processing gains are drawn.

marginal: sample the gamma laws of the intended and interfering gains.

matrix: draw explicit channel matrices and project them with the
zero-forcing receiver (required for time-correlated fading).
""",
    )

    @model_validator(mode="after")
    def validate_q_floor(self):  # pylint: disable=E0213
        draws = self.fading_draws_per_realization
        if self.q_floor is not None and self.q_floor * draws > 1:
            raise ValueError(
                f"q_floor ({self.q_floor}) exceeds the resolution 1/M of the "
                f"conditional success estimate (M = "
                f"{self.fading_draws_per_realization})"
            )
        return self

    @property
    def effective_q_floor(self) -> float:
        if self.q_floor is not None:
            return self.q_floor
        return 1.0 / (2 * self.fading_draws_per_realization)
