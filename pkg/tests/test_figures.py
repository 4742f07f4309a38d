import pytest

from harqnet.config.experiment_config import KIND_FIGURES
from harqnet.figures import DESK_TRIALS, FIGURE_PRESETS, figure_spec


def test_a_preset_for_every_figure():
    assert sorted(FIGURE_PRESETS) == sorted(KIND_FIGURES.values())


@pytest.mark.parametrize("number", sorted(FIGURE_PRESETS))
def test_presets_are_valid_experiments(number):
    spec = figure_spec(number)
    assert spec.figure == number
    assert spec.name == f"figure_{number}"
    assert spec.provenance["figure"] == number
    assert "trials" in spec.provenance["reduced"]
    assert spec.sim.disk_radius is None


def test_desk_scale_trials():
    assert figure_spec(1).sim.trials == DESK_TRIALS
    # the doppler preset simulates whole traces and runs fewer
    assert figure_spec(6).sim.trials == 500
    assert "500 instead of 40000" in figure_spec(6).provenance["reduced"]["trials"]


def test_throughput_presets_note_the_coarse_grid():
    assert "design_grid" in figure_spec(8).provenance["reduced"]
    assert "design_grid" not in figure_spec(4).provenance["reduced"]
    assert figure_spec(9).design_grid.stream_grid == [1, 2, 4, 8]


def test_output_folder():
    assert figure_spec(2, output_folder="fig2").environment.output_folder == "fig2"


def test_unknown_figure():
    with pytest.raises(ValueError, match="No preset for figure 12"):
        figure_spec(12)


def test_presets_are_not_shared():
    spec = figure_spec(1)
    spec.sweep.values.append(16)
    assert figure_spec(1).sweep.values == [1, 2, 4, 8]
