from typing import Optional

from pydantic import BaseModel, Field


class DopplerConfig(BaseModel, extra="forbid", frozen=True):  # type: ignore
    speed: float = Field(
        default=0.0, ge=0, description="Relative speed v in m/s of every link."
    )
    carrier: float = Field(
        default=2.4e9, ge=0, description="Carrier frequency f_c in Hz."
    )
    slot_duration: float = Field(
        default=5e-4, ge=0, description="Slot duration in seconds."
    )
    interferer_speed: Optional[float] = Field(
        default=None,
        ge=0,
        description="Speed in m/s of the interfering links. Defaults to speed, "
        "i.e. all links share one correlation coefficient.",
    )
