import pytest
from ruamel.yaml import YAML

from harqnet.bin.main import start_harqnet
from harqnet.bin.reproduce_figure_script import reproduce_figure_entry
from harqnet.config import ExperimentSpec
from tests.utils import capture_streams, satisfy


def test_show_preset():
    with capture_streams() as (out, _):
        reproduce_figure_entry(["4", "--show"])
    shown = YAML(typ="safe", pure=True).load(out.getvalue())
    assert shown["name"] == "figure_4"
    assert shown["kind"] == "mtd_vs_S"
    assert shown["provenance"]["figure"] == 4


def test_show_seeded_preset():
    with capture_streams() as (out, _):
        start_harqnet(["harqnet", "reproduce-figure", "6", "--seed", "21", "--show"])
    shown = YAML(typ="safe", pure=True).load(out.getvalue())
    assert shown["sim"]["seed"] == 21


def test_unknown_figure():
    with capture_streams() as (_, err), pytest.raises(SystemExit) as e:
        reproduce_figure_entry(["10"])
    assert e.value.code == 2
    assert "invalid choice" in err.getvalue()


def test_runs_the_preset(mocker):
    run_and_report = mocker.patch(
        "harqnet.bin.reproduce_figure_script.run_and_report"
    )
    reproduce_figure_entry(["2", "-o", "fig2", "-w", "3", "--no-progress"])
    run_and_report.assert_called_once_with(
        satisfy(lambda spec: isinstance(spec, ExperimentSpec) and spec.figure == 2),
        output_dir="fig2",
        workers=3,
        show_progress=False,
    )
