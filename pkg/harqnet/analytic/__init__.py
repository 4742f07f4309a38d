from .moments import (
    MomentSet,
    clear_moment_cache,
    lambda_cross,
    lambda_cross_independent,
    lambda_same,
    mean_block_rate,
    mean_stream_rate,
    moment_set,
)
from .rcc import (
    DegenerateVarianceError,
    RccResult,
    block_rcc,
    coverage_normal,
    rcc,
    slot_rcc,
)
from .theta import laplace_exponent, theta1, theta2, theta3

__all__ = [
    "DegenerateVarianceError",
    "MomentSet",
    "RccResult",
    "block_rcc",
    "clear_moment_cache",
    "coverage_normal",
    "lambda_cross",
    "lambda_cross_independent",
    "lambda_same",
    "laplace_exponent",
    "mean_block_rate",
    "mean_stream_rate",
    "moment_set",
    "rcc",
    "slot_rcc",
    "theta1",
    "theta2",
    "theta3",
]
