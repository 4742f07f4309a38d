"""
Delay, rate correlation and throughput of retransmission schemes in Poisson
MIMO networks, by numerical analysis and by simulation.

"""

try:
    from .version import version

    __version__ = version
except ImportError:
    __version__ = "0.0.0"

from harqnet import docs, util
from harqnet.config_keys import ConfigKeys
from harqnet.export import ResultColumns, ResultRow, read_plot_data
from harqnet.figures import figure_spec
from harqnet.suite import ExperimentRun, read_manifest, run_experiment

__all__ = [
    "ConfigKeys",
    "ExperimentRun",
    "ResultColumns",
    "ResultRow",
    "docs",
    "figure_spec",
    "read_manifest",
    "read_plot_data",
    "run_experiment",
    "util",
]
