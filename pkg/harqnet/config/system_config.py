from typing import Any

from pydantic import BaseModel, Field, model_validator

from .path_loss_config import PathLossParams


class SystemParams(BaseModel, extra="forbid", frozen=True):  # type: ignore
    lambda_density: float = Field(
        default=1e-3,
        ge=0,
        description="Density of the Poisson field of transmitters, in "
        "transmitters per square meter.",
    )
    activity: float = Field(
        default=0.6,
        gt=0,
        le=1,
        description="Probability that a transmitter is active in a slot (RR) or "
        "a block (B-IR).",
    )
    link_distance: float = Field(
        default=15.0,
        gt=0,
        description="Distance in meters between every transmitter and its "
        "dedicated receiver.",
    )
    streams: int = Field(
        default=4,
        ge=1,
        description="Number of spatially multiplexed streams S. Must not exceed "
        "min(tx_antennas, rx_antennas).",
    )
    tx_antennas: int = Field(
        default=16, ge=1, description="Number of transmit antennas."
    )
    rx_antennas: int = Field(
        default=16, ge=1, description="Number of receive antennas."
    )
    block_length: int = Field(
        default=1,
        ge=1,
        description="Number of slots T in one block of the blocked incremental "
        "redundancy scheme.",
    )
    rate_threshold: float = Field(
        default=2.0,
        ge=0,
        description="Rate threshold in nat/s/Hz the aggregate rate must reach for "
        "a successful decoding.",
    )
    path_loss: PathLossParams = Field(
        default_factory=PathLossParams,
        description="Line-of-sight and non-line-of-sight path-loss model.",
    )

    @model_validator(mode="after")
    def validate_streams_fit_antennas(self):  # pylint: disable=E0213
        max_streams = min(self.tx_antennas, self.rx_antennas)
        if self.streams > max_streams:
            raise ValueError(
                f"streams ({self.streams}) must not exceed min(tx_antennas, "
                f"rx_antennas) = {max_streams}"
            )
        return self

    @property
    def diversity_order(self) -> int:
        """S' = Nr - S + 1, the degrees of freedom of the intended ZF gain."""
        return self.rx_antennas - self.streams + 1

    def with_updates(self, **kwargs: Any) -> "SystemParams":
        """Return a validated copy with some fields replaced.

        Path-loss fields may be given directly, e.g. ``alpha_los=3.0``.
        """
        path_loss_fields = set(PathLossParams.model_fields)
        path_loss_updates = {k: v for k, v in kwargs.items() if k in path_loss_fields}
        updates = {k: v for k, v in kwargs.items() if k not in path_loss_fields}
        data = self.model_dump()
        data["path_loss"].update(path_loss_updates)
        data.update(updates)
        return SystemParams.model_validate(data)
