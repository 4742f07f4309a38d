DEFAULT_OUTPUT_DIR = "harqnet_output"
DEFAULT_LOGGING_FORMAT = "%(asctime)s %(name)s %(levelname)s: %(message)s"

HARQNET = "harqnet"
HARQNET_MAIN = "harqnet_main"

LOG_DIR = "logs"
LOG_FILE = "harqnet.log"

MANIFEST_FILE = "manifest.yml"
PLOT_DATA_DIR = "plot_data"
PLOT_DATA_SUFFIX = ".dat"
RESULTS_FILE = "results.csv"
TIMING_FILE = "timing.csv"

SEED_ENV_VAR = "HARQNET_SEED"

ANALYTIC = "analytic"
MONTE_CARLO = "monte_carlo"

RR = "RR"
BIR = "B-IR"

SPEED_OF_LIGHT = 299_792_458.0

EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 1
EXIT_ALL_POINTS_FAILED = 2
EXIT_IO_ERROR = 3
