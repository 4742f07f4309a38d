import logging
import math
import os
import sys
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from harqnet.strings import HARQNET, PLOT_DATA_SUFFIX
from harqnet.util import makedirs_if_needed

if sys.version_info < (3, 11):
    from enum import Enum

    class StrEnum(str, Enum):
        pass

else:
    from enum import StrEnum


class ResultColumns(StrEnum):
    # NOTE: Always add a new column name to the list below!
    EXPERIMENT = "experiment"
    SWEEP_VALUE = "sweep_value"
    BACKEND = "backend"
    METRIC = "metric"
    VALUE = "value"
    CI_HALFWIDTH = "ci_halfwidth"
    SEED = "seed"
    WALL_TIME_S = "wall_time_s"
    ERROR = "error"

    @classmethod
    def get_all(cls):
        return [
            cls.EXPERIMENT,
            cls.SWEEP_VALUE,
            cls.BACKEND,
            cls.METRIC,
            cls.VALUE,
            cls.CI_HALFWIDTH,
            cls.SEED,
            cls.WALL_TIME_S,
            cls.ERROR,
        ]


@dataclass(frozen=True)
class ResultRow:
    """One (sweep point, backend, metric) evaluation.

    ci_halfwidth and seed stay empty for the analytic backend; error holds
    the reason when value could not be computed.
    """

    experiment: str
    sweep_value: Union[int, float]
    backend: str
    metric: str
    value: float = math.nan
    ci_halfwidth: Optional[float] = None
    seed: Optional[int] = None
    wall_time_s: Optional[float] = None
    error: str = ""

    @property
    def failed(self) -> bool:
        return bool(self.error) or not math.isfinite(self.value)


def results_frame(rows: Iterable[ResultRow]) -> pd.DataFrame:
    frame = pd.DataFrame(
        [asdict(row) for row in rows],
        columns=[column.value for column in ResultColumns.get_all()],
    )
    # nullable integers keep seeds out of float notation
    frame[ResultColumns.SEED.value] = frame[ResultColumns.SEED.value].astype("Int64")
    return frame


def write_results_csv(rows: Iterable[ResultRow], path: str) -> pd.DataFrame:
    frame = results_frame(rows)
    makedirs_if_needed(os.path.dirname(path) or ".")
    frame.to_csv(path, index=False, float_format="%.12g", encoding="utf-8")
    logging.getLogger(HARQNET).info("Results written to %s", path)
    return frame


def read_results_csv(path: str) -> pd.DataFrame:
    frame = pd.read_csv(path, keep_default_na=False, na_values=[""])
    frame[ResultColumns.SEED.value] = frame[ResultColumns.SEED.value].astype("Int64")
    frame[ResultColumns.ERROR.value] = frame[ResultColumns.ERROR.value].fillna("")
    return frame


def plot_data_name(metric: str, backend: str) -> str:
    return f"{metric}__{backend}{PLOT_DATA_SUFFIX}"


def _format(number: float) -> str:
    return "%.12g" % number


def write_plot_data(rows: Iterable[ResultRow], directory: str) -> List[str]:
    """One whitespace separated file per (metric, backend), rows in sweep order.

    Failed rows are left out. A third column carries the confidence half
    width when any row of the file has one.
    """
    series: Dict[Tuple[str, str], List[ResultRow]] = {}
    for row in rows:
        if not row.failed:
            series.setdefault((row.metric, row.backend), []).append(row)

    makedirs_if_needed(directory)
    written = []
    for (metric, backend), points in series.items():
        with_ci = any(point.ci_halfwidth is not None for point in points)
        lines = [
            f"# metric: {metric}",
            f"# backend: {backend}",
            "# x y ci" if with_ci else "# x y",
        ]
        for point in points:
            columns = [_format(point.sweep_value), _format(point.value)]
            if with_ci:
                ci = point.ci_halfwidth
                columns.append(_format(ci if ci is not None else math.nan))
            lines.append(" ".join(columns))

        path = os.path.join(directory, plot_data_name(metric, backend))
        with open(path, "w", encoding="utf-8") as out:
            out.write("\n".join(lines) + "\n")
        written.append(path)
    return written


def read_plot_data(path: str) -> Tuple[Dict[str, str], np.ndarray]:
    """Header fields and the numeric block, one row per sweep point."""
    header = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            if not line.startswith("#"):
                break
            key, _, value = line[1:].partition(":")
            if value:
                header[key.strip()] = value.strip()
    data = np.loadtxt(path, comments="#", ndmin=2)
    return header, data


def write_timing_csv(timings: List[Dict[str, object]], path: str) -> None:
    frame = pd.DataFrame(timings, columns=["sweep_value", "backend", "wall_time_s"])
    frame.to_csv(path, index=False, float_format="%.6f", encoding="utf-8")
