from typing import Literal

from pydantic import BaseModel, Field, model_validator


class PathLossParams(BaseModel, extra="forbid", frozen=True):  # type: ignore
    alpha_los: float = Field(
        default=2.09, gt=0, description="Path-loss exponent of line-of-sight links."
    )
    alpha_nlos: float = Field(
        default=3.75,
        gt=0,
        description="Path-loss exponent of non-line-of-sight links. Must not be "
        "smaller than alpha_los.",
    )
    phi_los: float = Field(
        default=1.0, gt=0, description="Path-loss intercept of line-of-sight links."
    )
    phi_nlos: float = Field(
        default=1.0,
        gt=0,
        description="Path-loss intercept of non-line-of-sight links.",
    )
    d0: float = Field(
        default=6.0,
        gt=0,
        description="Near-field distance in meters. Links shorter than d0 are "
        "always line-of-sight under the umi model.",
    )
    d1: float = Field(
        default=12.0,
        gt=0,
        description="Far-field distance in meters, the decay length of the "
        "exponential term of the line-of-sight probability.",
    )
    los_model: Literal["umi", "nlos_only", "los_only"] = Field(
        default="umi",
        description="""Line-of-sight probability model.

umi: min(d0/x, 1)(1 - exp(-x/d1)) + exp(-x/d1) (ITU-R urban micro).

nlos_only: every link is non-line-of-sight (single-slope model with the NLOS
exponent and intercept).

los_only: every link is line-of-sight (single-slope model with the LOS
exponent and intercept).
""",
    )

    @model_validator(mode="after")
    def validate_exponents(self):  # pylint: disable=E0213
        if self.alpha_nlos < self.alpha_los:
            raise ValueError(
                f"alpha_nlos ({self.alpha_nlos}) must be at least alpha_los "
                f"({self.alpha_los})"
            )
        # the aggregate interference of a planar field is only finite when the
        # far-field gain decays faster than x^-2
        if self.los_model in ("umi", "nlos_only") and self.alpha_nlos <= 2:
            raise ValueError(
                f"alpha_nlos must exceed 2 for los_model {self.los_model}, "
                f"got {self.alpha_nlos}"
            )
        if self.los_model == "los_only" and self.alpha_los <= 2:
            raise ValueError(
                f"alpha_los must exceed 2 for los_model los_only, got {self.alpha_los}"
            )
        if self.los_model == "umi" and self.alpha_los <= 1:
            raise ValueError(
                f"alpha_los must exceed 1 for los_model umi, got {self.alpha_los}"
            )
        return self
