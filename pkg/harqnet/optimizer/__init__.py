from .est import (
    TABLE_COLUMNS,
    EstResult,
    NoValidDesignError,
    optimize_est,
    throughput_gain,
)

__all__ = [
    "EstResult",
    "NoValidDesignError",
    "TABLE_COLUMNS",
    "optimize_est",
    "throughput_gain",
]
