from typing import List, Union

from pydantic import BaseModel, Field, ValidationInfo, field_validator

from .validation_utils import check_for_duplicates

SYSTEM_SWEEP_VARIABLES = (
    "lambda_density",
    "activity",
    "link_distance",
    "streams",
    "tx_antennas",
    "rx_antennas",
    "block_length",
    "rate_threshold",
    "alpha_los",
    "alpha_nlos",
    "phi_los",
    "phi_nlos",
    "d0",
    "d1",
)
DOPPLER_SWEEP_VARIABLES = ("speed",)
SHORT_PACKET_SWEEP_VARIABLES = ("bits", "error_target", "bandwidth")

SWEEP_VARIABLES = (
    SYSTEM_SWEEP_VARIABLES + DOPPLER_SWEEP_VARIABLES + SHORT_PACKET_SWEEP_VARIABLES
)
INTEGER_SWEEP_VARIABLES = ("streams", "tx_antennas", "rx_antennas", "block_length")


class SweepConfig(BaseModel, extra="forbid"):  # type: ignore
    variable: str = Field(
        description="Name of the swept parameter. One of: "
        + ", ".join(SWEEP_VARIABLES)
    )
    values: List[float] = Field(
        min_length=1, description="Values taken by the swept parameter, in order."
    )

    @field_validator("variable")
    @classmethod
    def validate_variable(cls, variable):  # pylint: disable=E0213
        if variable not in SWEEP_VARIABLES:
            raise ValueError(
                f"Unknown sweep variable '{variable}'. Recognized names are: "
                f"{', '.join(SWEEP_VARIABLES)}"
            )
        return variable

    @field_validator("values")
    @classmethod
    def validate_values(cls, values, info: ValidationInfo):  # pylint: disable=E0213
        check_for_duplicates(values, "sweep")
        variable = info.data.get("variable")
        if variable in INTEGER_SWEEP_VARIABLES and any(v != int(v) for v in values):
            raise ValueError(f"Sweep variable {variable} takes integer values")
        return values

    def typed_values(self) -> List[Union[int, float]]:
        if self.variable in INTEGER_SWEEP_VARIABLES:
            return [int(v) for v in self.values]
        return list(self.values)
