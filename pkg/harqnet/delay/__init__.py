from .beta_prime import BetaPrimeLaw, beta_prime_cdf
from .delta import beta_threshold, delta
from .estimate import DelayEstimate, DelayKind, UnboundedDelayError
from .mtd import (
    mtd_bir,
    mtd_high_mobile,
    mtd_high_mobile_sandwich,
    mtd_rr,
    mtd_sandwich,
)

__all__ = [
    "BetaPrimeLaw",
    "DelayEstimate",
    "DelayKind",
    "UnboundedDelayError",
    "beta_prime_cdf",
    "beta_threshold",
    "delta",
    "mtd_bir",
    "mtd_high_mobile",
    "mtd_high_mobile_sandwich",
    "mtd_rr",
    "mtd_sandwich",
]
