from pydantic import BaseModel, Field


class ShortPacketConfig(BaseModel, extra="forbid", frozen=True):  # type: ignore
    bits: float = Field(
        default=50.0,
        gt=0,
        description="Payload size. It is divided by the number of channel uses "
        "and compared with rates in the same unit.",
    )
    bandwidth: float = Field(default=5e4, gt=0, description="Bandwidth W in Hz.")
    slot_duration: float = Field(
        default=5e-4, gt=0, description="Slot duration in seconds."
    )
    error_target: float = Field(
        default=1e-3,
        gt=0,
        lt=1,
        description="Target decoding error probability of one slot.",
    )

    @property
    def channel_uses(self) -> float:
        return self.bandwidth * self.slot_duration

    @property
    def rate_floor(self) -> float:
        """Rate needed without any dispersion penalty."""
        return self.bits / self.channel_uses
