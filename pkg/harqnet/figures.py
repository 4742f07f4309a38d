"""Pre-baked experiments, one per figure, at desk scale.

The published curves use 40000 network realizations on a 10 km disk. The
presets keep every system parameter of the figures but run fewer trials on
the disk chosen by ``edge_radius``, and search a coarser design grid for the
throughput figures. Each reduction is written to the manifest.
"""

import copy
from typing import Any, Dict, Optional

from harqnet.config import KIND_FIGURES, ExperimentSpec

DESK_TRIALS = 2000
FULL_SCALE_TRIALS = 40000
FULL_SCALE_RADIUS = 10000.0

_DESK_SIM = {"trials": DESK_TRIALS, "fading_draws_per_realization": 200}
_DESK_GRID = {
    "activity_grid": [0.2, 0.4, 0.6, 0.8],
    "stream_grid": [1, 2, 4, 8],
    "rate_grid": [0.25, 0.5, 1.0, 2.0, 4.0, 8.0],
}
_DENSITIES = [1e-4, 3e-4, 1e-3, 3e-3, 1e-2]

FIGURE_PRESETS: Dict[int, Dict[str, Any]] = {
    1: {
        "kind": "rcc_vs_T",
        "base_params": {"lambda_density": 1e-3, "activity": 0.6, "streams": 4},
        "sweep": {"variable": "block_length", "values": [1, 2, 4, 8]},
    },
    2: {
        "kind": "coverage_vs_T",
        "base_params": {
            "lambda_density": 1e-3,
            "activity": 0.6,
            "streams": 4,
            "rate_threshold": 2.0,
        },
        "sweep": {"variable": "block_length", "values": [1, 2, 3, 4, 6, 8]},
    },
    3: {
        "kind": "mtd_bounds_vs_T",
        "base_params": {
            "lambda_density": 1e-3,
            "activity": 0.6,
            "streams": 4,
            "rate_threshold": 2.0,
        },
        "sweep": {"variable": "block_length", "values": [1, 2, 3, 4, 5, 6]},
    },
    4: {
        "kind": "mtd_vs_S",
        "base_params": {
            "lambda_density": 1e-3,
            "activity": 0.6,
            "block_length": 2,
            "rate_threshold": 2.0,
        },
        "sweep": {"variable": "streams", "values": [1, 2, 4, 8, 12, 14]},
    },
    5: {
        "kind": "noiseless_check",
        "base_params": {
            "activity": 0.5,
            "streams": 2,
            "block_length": 2,
            "rate_threshold": 3.0,
        },
        "sweep": {"variable": "lambda_density", "values": [1e-4, 5e-4, 1e-3]},
    },
    6: {
        "kind": "doppler_sweep",
        "base_params": {
            "lambda_density": 5e-4,
            "activity": 0.5,
            "streams": 2,
            "block_length": 4,
        },
        "doppler": {"carrier": 2.4e9, "slot_duration": 5e-4},
        "sweep": {"variable": "speed", "values": [0.0, 5.0, 10.0, 20.0, 30.0]},
        "sim": {"trials": 500},
    },
    7: {
        "kind": "short_packet_sweep",
        "base_params": {
            "lambda_density": 5e-4,
            "activity": 0.5,
            "streams": 2,
            "block_length": 2,
        },
        "short_packet": {
            "bandwidth": 5e4,
            "slot_duration": 5e-4,
            "error_target": 1e-3,
        },
        "sweep": {"variable": "bits", "values": [25.0, 50.0, 75.0, 100.0]},
    },
    8: {
        "kind": "est_vs_lambda",
        "base_params": {"block_length": 2},
        "sweep": {"variable": "lambda_density", "values": _DENSITIES},
        "design_grid": _DESK_GRID,
    },
    9: {
        "kind": "gain_vs_lambda",
        "base_params": {"block_length": 2},
        "sweep": {"variable": "lambda_density", "values": _DENSITIES},
        "design_grid": _DESK_GRID,
    },
}


def _reductions(preset: Dict[str, Any]) -> Dict[str, Any]:
    trials = preset["sim"]["trials"]
    notes = {
        "trials": f"{trials} instead of {FULL_SCALE_TRIALS}",
        "disk_radius": f"edge_radius instead of {FULL_SCALE_RADIUS:g} m",
    }
    if "design_grid" in preset:
        notes["design_grid"] = "coarse desk grid instead of the default grid"
    return notes


def figure_spec(number: int, output_folder: Optional[str] = None) -> ExperimentSpec:
    """The desk-scale experiment reproducing the given figure."""
    if number not in FIGURE_PRESETS:
        raise ValueError(
            f"No preset for figure {number}, choose one of "
            f"{', '.join(str(n) for n in sorted(FIGURE_PRESETS))}"
        )
    preset = copy.deepcopy(FIGURE_PRESETS[number])
    preset["sim"] = {**_DESK_SIM, **preset.get("sim", {})}
    preset["name"] = f"figure_{number}"
    preset["provenance"] = {"figure": number, "reduced": _reductions(preset)}
    if output_folder is not None:
        preset["environment"] = {"output_folder": output_folder}
    spec = ExperimentSpec.model_validate(preset)
    assert KIND_FIGURES[spec.kind] == number
    return spec
