from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field, PositiveInt, field_validator

from .system_config import SystemParams
from .validation_utils import check_for_duplicates, check_in_unit_interval


def _default_activity_grid() -> List[float]:
    return [round(0.1 * k, 1) for k in range(1, 11)]


def _default_rate_grid() -> List[float]:
    return [float(v) for v in np.logspace(-1, 1, 20)]


class DesignGrid(BaseModel, extra="forbid", frozen=True):  # type: ignore
    activity_grid: List[float] = Field(
        default_factory=_default_activity_grid,
        min_length=1,
        description="Candidate transmission activities p, each in (0, 1].",
    )
    stream_grid: Optional[List[PositiveInt]] = Field(
        default=None,
        description="Candidate stream counts S. Defaults to 1, ..., "
        "min(tx_antennas, rx_antennas).",
    )
    rate_grid: List[float] = Field(
        default_factory=_default_rate_grid,
        min_length=1,
        description="Candidate rate thresholds in nat/s/Hz. Defaults to 20 "
        "log-spaced values over [0.1, 10].",
    )

    @field_validator("activity_grid")
    @classmethod
    def validate_activities(cls, activity_grid):  # pylint: disable=E0213
        check_in_unit_interval(activity_grid, "activity_grid")
        check_for_duplicates(activity_grid, "activity_grid")
        return activity_grid

    @field_validator("stream_grid")
    @classmethod
    def validate_streams(cls, stream_grid):  # pylint: disable=E0213
        if stream_grid is not None:
            if not stream_grid:
                raise ValueError("stream_grid must not be empty")
            check_for_duplicates(stream_grid, "stream_grid")
        return stream_grid

    @field_validator("rate_grid")
    @classmethod
    def validate_rates(cls, rate_grid):  # pylint: disable=E0213
        if any(r <= 0 for r in rate_grid):
            raise ValueError("rate_grid values must be positive")
        check_for_duplicates(rate_grid, "rate_grid")
        return rate_grid

    def streams_for(self, params: SystemParams) -> List[int]:
        max_streams = min(params.tx_antennas, params.rx_antennas)
        if self.stream_grid is None:
            return list(range(1, max_streams + 1))
        too_many = [s for s in self.stream_grid if s > max_streams]
        if too_many:
            raise ValueError(
                f"stream_grid values {too_many} exceed min(tx_antennas, "
                f"rx_antennas) = {max_streams}"
            )
        return list(self.stream_grid)
