import math
import os

import pandas as pd

from harqnet.export import (
    ResultColumns,
    ResultRow,
    plot_data_name,
    read_plot_data,
    read_results_csv,
    results_frame,
    write_plot_data,
    write_results_csv,
    write_timing_csv,
)
from tests.utils import tmpdir

ROWS = [
    ResultRow("demo", 1, "analytic", "mtd_rr", 2.5),
    ResultRow("demo", 1, "monte_carlo", "mtd_rr", 2.4, 0.1, 17),
    ResultRow("demo", 2, "analytic", "mtd_rr", 3.125),
    ResultRow("demo", 2, "monte_carlo", "mtd_rr", error="ValueError: no draws"),
    ResultRow("demo", 2, "analytic", "mtd_bir", math.nan),
]


def test_failed_rows():
    assert not ROWS[0].failed
    assert ROWS[3].failed
    assert ROWS[4].failed


def test_results_frame_columns():
    frame = results_frame(ROWS)
    assert list(frame.columns) == [c.value for c in ResultColumns.get_all()]
    assert len(frame) == len(ROWS)
    assert frame["seed"].dtype == "Int64"


@tmpdir(None)
def test_results_csv():
    write_results_csv(ROWS, os.path.join("out", "results.csv"))
    with open(os.path.join("out", "results.csv"), encoding="utf-8") as f:
        lines = f.read().splitlines()
    assert lines[0] == ",".join(c.value for c in ResultColumns.get_all())
    # seeds stay integers and missing values stay empty
    assert lines[2] == "demo,1,monte_carlo,mtd_rr,2.4,0.1,17,,"
    assert lines[1] == "demo,1,analytic,mtd_rr,2.5,,,,"

    frame = read_results_csv(os.path.join("out", "results.csv"))
    assert frame["seed"].iloc[1] == 17
    assert pd.isna(frame["seed"].iloc[0])
    assert frame["error"].iloc[0] == ""
    assert frame["error"].iloc[3] == "ValueError: no draws"
    assert math.isnan(frame["value"].iloc[4])


@tmpdir(None)
def test_plot_data_files():
    written = write_plot_data(ROWS, "plot_data")
    names = sorted(os.path.basename(path) for path in written)
    assert names == [
        plot_data_name("mtd_rr", "analytic"),
        plot_data_name("mtd_rr", "monte_carlo"),
    ]

    header, data = read_plot_data(
        os.path.join("plot_data", plot_data_name("mtd_rr", "analytic"))
    )
    assert header == {"metric": "mtd_rr", "backend": "analytic"}
    assert data.tolist() == [[1.0, 2.5], [2.0, 3.125]]

    _, simulated = read_plot_data(
        os.path.join("plot_data", plot_data_name("mtd_rr", "monte_carlo"))
    )
    # the failed point at 2 is left out, the half width is a third column
    assert simulated.tolist() == [[1.0, 2.4, 0.1]]


def test_plot_data_name():
    assert plot_data_name("coverage", "analytic") == "coverage__analytic.dat"


@tmpdir(None)
def test_timing_csv():
    write_timing_csv(
        [{"sweep_value": 1, "backend": "analytic", "wall_time_s": 0.25}],
        "timing.csv",
    )
    frame = pd.read_csv("timing.csv")
    assert list(frame.columns) == ["sweep_value", "backend", "wall_time_s"]
    assert frame["wall_time_s"].iloc[0] == 0.25
