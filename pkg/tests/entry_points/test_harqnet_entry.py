import os
from unittest.mock import patch

import pytest

from harqnet.bin.list_experiments_script import list_experiments_entry
from harqnet.bin.main import start_harqnet
from harqnet.bin.render_script import render_entry
from harqnet.bin.run_script import run_entry
from harqnet.bin.validate_script import validate_entry
from harqnet.config.experiment_config import KIND_FIGURES
from harqnet.strings import (
    EXIT_ALL_POINTS_FAILED,
    EXIT_CONFIG_ERROR,
    EXIT_IO_ERROR,
    RESULTS_FILE,
)
from tests.utils import capture_streams, relpath, tmpdir

EXPERIMENTS = relpath("test_data", "experiments")


def test_unknown_command():
    with capture_streams() as (_, err), pytest.raises(SystemExit) as e:
        start_harqnet(["harqnet", "simulate"])
    assert e.value.code == 2
    assert "Unrecognized command" in err.getvalue()


def test_usage_lists_commands():
    with capture_streams() as (out, _), pytest.raises(SystemExit):
        start_harqnet(["harqnet", "--help"])
    for command in ("run", "validate", "list-experiments", "reproduce-figure"):
        assert command in out.getvalue()


def test_docs_dump():
    with capture_streams() as (out, _), pytest.raises(SystemExit) as e:
        start_harqnet(["harqnet", "--docs"])
    assert e.value.code == 0
    assert "base_params (optional)" in out.getvalue()
    assert "Default:" not in out.getvalue()

    with capture_streams() as (out, _), pytest.raises(SystemExit):
        start_harqnet(["harqnet", "--manual"])
    assert "Default: ``'rcc_vs_T'``" in out.getvalue()


@tmpdir(EXPERIMENTS)
def test_validate():
    with capture_streams() as (out, _):
        start_harqnet(["harqnet", "validate", "quick_analytic.yml"])
    assert "quick_analytic.yml is valid" in out.getvalue()

    with capture_streams() as (out, _):
        validate_entry(["quick_analytic.yml", "--show"])
    assert "kind: mtd_vs_S" in out.getvalue()
    # defaults are filled in
    assert "fading_draws_per_realization: 200" in out.getvalue()


@pytest.mark.parametrize(
    "config_file, message",
    [
        ("invalid_streams.yml", "streams (20) must not exceed"),
        ("invalid_sweep.yml", "Unknown sweep variable 'blocklength'"),
        ("invalid_yaml.yml", "invalid YAML syntax"),
        ("missing.yml", "File not found"),
    ],
)
@tmpdir(EXPERIMENTS)
def test_validate_rejects(config_file, message):
    with capture_streams() as (_, err), pytest.raises(SystemExit) as e:
        validate_entry([config_file])
    assert e.value.code == EXIT_CONFIG_ERROR
    assert message in err.getvalue()


def test_list_experiments():
    with capture_streams() as (out, _):
        list_experiments_entry([])
    lines = out.getvalue().splitlines()
    assert len(lines) == len(KIND_FIGURES)
    assert lines[0].startswith("1  rcc_vs_T")
    assert "default sweep: speed" in lines[5]


@patch.dict("os.environ", {"HARQNET_TEST_USER": "bob"})
@tmpdir(EXPERIMENTS)
def test_render():
    with capture_streams() as (out, _):
        render_entry(["templated.yml"])
    rendered = out.getvalue()
    assert "name: templated_bob" in rendered
    assert "r{{" not in rendered
    assert "config_path" not in rendered


@tmpdir(EXPERIMENTS)
def test_run():
    with capture_streams() as (out, _):
        run_entry(["quick_analytic.yml", "-o", "out", "--no-progress"])
    assert "4 results computed" in out.getvalue()
    assert os.path.isfile(os.path.join("out", RESULTS_FILE))


@tmpdir(EXPERIMENTS)
def test_run_uses_configured_output_folder():
    with capture_streams():
        start_harqnet(["harqnet", "run", "quick_analytic.yml", "--no-progress"])
    assert os.path.isfile(os.path.join("quick_output", RESULTS_FILE))


@tmpdir(EXPERIMENTS)
def test_run_with_progress_bar():
    with capture_streams() as (out, _):
        run_entry(["quick_analytic.yml", "-o", "out"])
    assert "4 results computed" in out.getvalue()


@tmpdir(EXPERIMENTS)
def test_run_where_every_point_fails():
    with capture_streams() as (out, _), pytest.raises(SystemExit) as e:
        run_entry(["always_active.yml", "-o", "out", "--no-progress"])
    assert e.value.code == EXIT_ALL_POINTS_FAILED
    assert "All 4 results of always_active failed" in out.getvalue()
    assert os.path.isfile(os.path.join("out", RESULTS_FILE))


@patch("harqnet.bin.utils.run_experiment", side_effect=PermissionError("denied"))
@tmpdir(EXPERIMENTS)
def test_run_with_unwritable_output(_):
    with capture_streams() as (_, err), pytest.raises(SystemExit) as e:
        run_entry(["quick_analytic.yml", "-o", "out", "--no-progress"])
    assert e.value.code == EXIT_IO_ERROR
    assert "Writing results failed: denied" in err.getvalue()
