from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator

from harqnet.strings import DEFAULT_OUTPUT_DIR

from .validation_utils import check_path_valid


class EnvironmentConfig(BaseModel, extra="forbid"):  # type: ignore
    output_folder: Optional[str] = Field(
        default=DEFAULT_OUTPUT_DIR, description="Folder for outputs of harqnet"
    )
    log_level: Optional[Literal["debug", "info", "warning", "error", "critical"]] = (
        Field(
            default="info",
            description="""Verbosity of the run log written next to the results.

debug: the resolved experiment and the wall time of every sweep point.

info (default): versions, the seed in use and where results were written.

warning: unreliable estimates, such as censored delays, clipped rate
correlations or an edge radius capped at the disk limit, and failed points.

error: runs where every point failed or the results could not be written.

critical: silent in normal operation.
""",
        )
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="Number of concurrent workers for trials and grid points. "
        "Results do not depend on it.",
    )
    record_timing: bool = Field(
        default=False,
        description="Fill the wall_time_s column of the result table. Timings are "
        "always written to timing.csv; keeping them out of results.csv makes reruns "
        "byte-identical.",
    )

    @field_validator("output_folder", mode="before")
    @classmethod
    def validate_output_folder(cls, output_folder):  # pylint:disable=E0213
        check_path_valid(output_folder)
        return output_folder
