from .analytic_config import AnalyticConfig
from .design_grid_config import DesignGrid
from .doppler_config import DopplerConfig
from .environment_config import EnvironmentConfig
from .experiment_config import KIND_FIGURES, ExperimentSpec
from .path_loss_config import PathLossParams
from .quadrature_config import QuadratureSpec
from .short_packet_config import ShortPacketConfig
from .sim_config import SimConfig
from .sweep_config import SWEEP_VARIABLES, SweepConfig
from .system_config import SystemParams

__all__ = [
    "ExperimentSpec",
    "AnalyticConfig",
    "DesignGrid",
    "DopplerConfig",
    "EnvironmentConfig",
    "KIND_FIGURES",
    "PathLossParams",
    "QuadratureSpec",
    "ShortPacketConfig",
    "SimConfig",
    "SWEEP_VARIABLES",
    "SweepConfig",
    "SystemParams",
]
