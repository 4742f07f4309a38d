import logging
import os
from argparse import ArgumentParser
from io import StringIO
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator
from ruamel.yaml import YAML, YAMLError

from harqnet.config_file_loader import yaml_file_to_substituted_config_dict
from harqnet.strings import ANALYTIC, EXIT_CONFIG_ERROR, MONTE_CARLO

from .analytic_config import AnalyticConfig
from .design_grid_config import DesignGrid
from .doppler_config import DopplerConfig
from .environment_config import EnvironmentConfig
from .short_packet_config import ShortPacketConfig
from .sim_config import SimConfig
from .sweep_config import (
    DOPPLER_SWEEP_VARIABLES,
    SHORT_PACKET_SWEEP_VARIABLES,
    SweepConfig,
)
from .system_config import SystemParams
from .validation_utils import format_errors

ExperimentKind = Literal[
    "rcc_vs_T",
    "coverage_vs_T",
    "mtd_bounds_vs_T",
    "mtd_vs_S",
    "noiseless_check",
    "doppler_sweep",
    "short_packet_sweep",
    "est_vs_lambda",
    "gain_vs_lambda",
]
Backend = Literal["analytic", "monte_carlo"]

KIND_FIGURES: Dict[str, int] = {
    "rcc_vs_T": 1,
    "coverage_vs_T": 2,
    "mtd_bounds_vs_T": 3,
    "mtd_vs_S": 4,
    "noiseless_check": 5,
    "doppler_sweep": 6,
    "short_packet_sweep": 7,
    "est_vs_lambda": 8,
    "gain_vs_lambda": 9,
}

KIND_DESCRIPTIONS: Dict[str, str] = {
    "rcc_vs_T": "block and slot rate correlation coefficients versus T",
    "coverage_vs_T": "B-IR coverage probability versus T",
    "mtd_bounds_vs_T": "B-IR delay, its RR sandwich and high-mobile bounds versus T",
    "mtd_vs_S": "RR and B-IR mean transmission delay versus S",
    "noiseless_check": "interference-limited reference delays versus density",
    "doppler_sweep": "delay under Gauss-Markov fading versus speed",
    "short_packet_sweep": "short-packet and equivalent long-packet delay",
    "est_vs_lambda": "optimized effective spatial throughput versus density",
    "gain_vs_lambda": "B-IR over RR throughput gain versus density",
}

DEFAULT_SWEEPS: Dict[str, Dict[str, Any]] = {
    "rcc_vs_T": {"variable": "block_length", "values": [1, 2, 4, 8]},
    "coverage_vs_T": {"variable": "block_length", "values": [1, 2, 4, 8]},
    "mtd_bounds_vs_T": {"variable": "block_length", "values": [1, 2, 3, 4, 6, 8]},
    "mtd_vs_S": {"variable": "streams", "values": [1, 2, 4, 8, 12]},
    "noiseless_check": {"variable": "lambda_density", "values": [1e-4, 5e-4, 1e-3]},
    "doppler_sweep": {"variable": "speed", "values": [0, 5, 10, 20, 30]},
    "short_packet_sweep": {"variable": "bits", "values": [25, 50, 75, 100]},
    "est_vs_lambda": {
        "variable": "lambda_density",
        "values": [1e-4, 3e-4, 1e-3, 3e-3, 1e-2],
    },
    "gain_vs_lambda": {
        "variable": "lambda_density",
        "values": [1e-4, 3e-4, 1e-3, 3e-3, 1e-2],
    },
}

SIMULATION_ONLY_KINDS = ("doppler_sweep", "short_packet_sweep")
# a Monte Carlo delay per design point is opt-in
ANALYTIC_DEFAULT_KINDS = ("est_vs_lambda", "gain_vs_lambda")
DESIGN_VARIABLES = ("activity", "streams", "rate_threshold")


class ExperimentSpec(BaseModel, extra="forbid"):  # type: ignore
    name: str = Field(default="experiment", description="Name of the experiment.")
    kind: ExperimentKind = Field(
        default="rcc_vs_T",
        description="What the experiment computes. Every kind reproduces one "
        "figure: "
        + "; ".join(f"{k}: {v}" for k, v in KIND_DESCRIPTIONS.items())
        + ".",
    )
    base_params: SystemParams = Field(
        default_factory=SystemParams,
        description="System parameters shared by every sweep point.",
    )
    sim: SimConfig = Field(
        default_factory=SimConfig, description="Monte Carlo settings."
    )
    analytic: AnalyticConfig = Field(
        default_factory=AnalyticConfig, description="Analytic engine settings."
    )
    sweep: Optional[SweepConfig] = Field(
        default=None,
        description="Swept parameter and its values. Defaults depend on kind.",
    )
    backends: Optional[List[Backend]] = Field(
        default=None,
        description="Engines to run, a subset of analytic and monte_carlo. "
        "Defaults to both, to monte_carlo only for doppler_sweep and "
        "short_packet_sweep, and to analytic only for est_vs_lambda and "
        "gain_vs_lambda.",
    )
    doppler: DopplerConfig = Field(
        default_factory=DopplerConfig,
        description="Time-correlated fading settings (doppler_sweep).",
    )
    short_packet: ShortPacketConfig = Field(
        default_factory=ShortPacketConfig,
        description="Finite-blocklength settings (short_packet_sweep).",
    )
    design_grid: DesignGrid = Field(
        default_factory=DesignGrid,
        description="Design space of the throughput optimization "
        "(est_vs_lambda, gain_vs_lambda).",
    )
    environment: EnvironmentConfig = Field(
        default_factory=EnvironmentConfig,
        description="Output folder, logging and parallelism.",
    )
    definitions: Optional[dict] = Field(
        default_factory=lambda: {},
        description="""Section for specifying variables.

Used to specify variables that will be replaced in the file when encountered.

| density: 0.001
| streams: 4

They are referenced as r{{ density }}. The directory of the config file is
available as r{{ configpath }} and environment variables are exposed in the
form 'os.NAME', for example r{{ os.USER }}.
""",
    )
    provenance: Optional[dict] = Field(
        default=None,
        description="Written by harqnet into manifests: code version, resolved "
        "seed and notes on reduced trial counts. Ignored on input.",
    )
    config_path: Optional[str] = Field(default=None, exclude=True)

    @model_validator(mode="after")
    def fill_kind_defaults(self):  # pylint: disable=E0213
        if self.sweep is None:
            self.sweep = SweepConfig.model_validate(DEFAULT_SWEEPS[self.kind])
        if self.backends is None:
            if self.kind in SIMULATION_ONLY_KINDS:
                self.backends = [MONTE_CARLO]
            elif self.kind in ANALYTIC_DEFAULT_KINDS:
                self.backends = [ANALYTIC]
            else:
                self.backends = [ANALYTIC, MONTE_CARLO]
        return self

    @model_validator(mode="after")
    def validate_backends(self):  # pylint: disable=E0213
        assert self.backends is not None
        if not self.backends:
            raise ValueError("backends must name at least one engine")
        if len(set(self.backends)) != len(self.backends):
            raise ValueError(f"backends must be unique, got {self.backends}")
        if self.kind in SIMULATION_ONLY_KINDS and ANALYTIC in self.backends:
            raise ValueError(f"kind {self.kind} is simulated only, remove 'analytic'")
        return self

    @model_validator(mode="after")
    def validate_sweep_fits_kind(self):  # pylint: disable=E0213
        assert self.sweep is not None
        variable = self.sweep.variable
        if variable in DOPPLER_SWEEP_VARIABLES and self.kind != "doppler_sweep":
            raise ValueError(f"Sweep variable {variable} requires kind doppler_sweep")
        if (
            variable in SHORT_PACKET_SWEEP_VARIABLES
            and self.kind != "short_packet_sweep"
        ):
            raise ValueError(
                f"Sweep variable {variable} requires kind short_packet_sweep"
            )
        if self.kind in ("est_vs_lambda", "gain_vs_lambda") and (
            variable in DESIGN_VARIABLES
        ):
            raise ValueError(
                f"{variable} is a design variable of {self.kind} and cannot be swept"
            )
        for value in self.sweep.typed_values():
            try:
                self.params_at(value)
            except ValueError as err:
                raise ValueError(
                    f"Sweep value {variable}={value} gives invalid parameters: {err}"
                ) from err
        return self

    @property
    def figure(self) -> int:
        return KIND_FIGURES[self.kind]

    def params_at(self, value) -> SystemParams:
        """System parameters of the sweep point where the swept variable is value."""
        assert self.sweep is not None
        variable = self.sweep.variable
        if variable in DOPPLER_SWEEP_VARIABLES + SHORT_PACKET_SWEEP_VARIABLES:
            return self.base_params
        return self.base_params.with_updates(**{variable: value})

    def doppler_at(self, value) -> DopplerConfig:
        assert self.sweep is not None
        if self.sweep.variable in DOPPLER_SWEEP_VARIABLES:
            return self.doppler.model_copy(update={self.sweep.variable: float(value)})
        return self.doppler

    def short_packet_at(self, value) -> ShortPacketConfig:
        assert self.sweep is not None
        if self.sweep.variable in SHORT_PACKET_SWEEP_VARIABLES:
            return ShortPacketConfig.model_validate(
                {**self.short_packet.model_dump(), self.sweep.variable: value}
            )
        return self.short_packet

    @property
    def logging_level(self) -> int:
        level = self.environment.log_level or "info"
        levels = {
            "debug": logging.DEBUG,  # 10
            "info": logging.INFO,  # 20
            "warning": logging.WARNING,  # 30
            "error": logging.ERROR,  # 40
            "critical": logging.CRITICAL,  # 50
        }
        return levels.get(level.lower(), logging.INFO)

    @property
    def config_directory(self) -> Optional[str]:
        if self.config_path is not None:
            return os.path.dirname(os.path.realpath(self.config_path))
        return None

    @property
    def output_dir(self) -> str:
        path = self.environment.output_folder or ""
        if os.path.isabs(path) or self.config_directory is None:
            return path
        return os.path.join(self.config_directory, path)

    def with_seed(self, seed: int) -> "ExperimentSpec":
        data = self.to_dict()
        data["sim"]["seed"] = seed
        resolved = ExperimentSpec.model_validate(data)
        resolved.config_path = self.config_path
        return resolved

    def to_dict(self) -> dict:
        return self.model_dump(exclude_none=True)

    @classmethod
    def with_defaults(cls, **kwargs) -> "ExperimentSpec":
        """Creates an experiment with default values for everything not given."""
        return ExperimentSpec.model_validate(kwargs)

    @staticmethod
    def lint_config_dict(config: dict) -> List[dict]:
        try:
            ExperimentSpec.model_validate(config)
            return []
        except ValidationError as err:
            return err.errors()

    @staticmethod
    def load_file(config_path: str) -> "ExperimentSpec":
        config_path = os.path.realpath(config_path)

        if not os.path.isfile(config_path):
            raise FileNotFoundError("File not found: {}".format(config_path))

        config_dict = yaml_file_to_substituted_config_dict(config_path)
        return ExperimentSpec.model_validate(config_dict)

    @staticmethod
    def load_file_with_argparser(
        config_path, parser: ArgumentParser
    ) -> Optional["ExperimentSpec"]:
        try:
            return ExperimentSpec.load_file(config_path)
        except FileNotFoundError:
            parser.print_usage()
            parser.exit(EXIT_CONFIG_ERROR, f"File not found: {config_path}\n")
        except YAMLError as e:
            parser.print_usage()
            parser.exit(
                EXIT_CONFIG_ERROR,
                f"The config file: <{config_path}> contains"
                f" invalid YAML syntax: {str(e)}\n",
            )
        except ValidationError as e:
            parser.print_usage()
            parser.exit(
                EXIT_CONFIG_ERROR,
                f"Loading config file <{config_path}> failed with:\n"
                f"{format_errors(e)}\n",
            )
        return None

    def dump(self, fname: Optional[str] = None) -> Optional[str]:
        """Write a config dict to file or return it if fname is None."""
        stripped_conf = self.to_dict()

        yaml = YAML(typ="safe", pure=True)
        yaml.default_flow_style = False
        if fname is None:
            with StringIO() as sio:
                yaml.dump(stripped_conf, sio)
                return sio.getvalue()

        with open(fname, "w", encoding="utf-8") as out:
            yaml.dump(stripped_conf, out)

        return None
