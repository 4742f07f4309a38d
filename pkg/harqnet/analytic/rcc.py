"""Rate correlation coefficients and normal-approximation coverage."""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from scipy.stats import norm

from harqnet.config import AnalyticConfig, SystemParams
from harqnet.strings import HARQNET

from .moments import MomentSet, moment_set

# relative size below which a variance is treated as zero
_VARIANCE_FLOOR = 1e-12


class DegenerateVarianceError(ValueError):
    """A correlation or Gaussian approximation needs a variance that vanishes."""


@dataclass(frozen=True)
class RccResult:
    block_rcc: float
    slot_rcc: float


def _variance(pairs: int, draws: int, moments: MomentSet) -> Tuple[float, float]:
    """pairs Lambda_cross + draws Lambda_same - mu_C^2 and its scale."""
    terms = (
        pairs * moments.lambda_cross,
        draws * moments.lambda_same,
        moments.mu_c**2,
    )
    return terms[0] + terms[1] - terms[2], max(abs(t) for t in terms)


def _correlation(
    numerator: float, pairs: int, draws: int, moments: MomentSet, name: str
) -> float:
    denominator, scale = _variance(pairs, draws, moments)
    if denominator <= _VARIANCE_FLOOR * scale:
        raise DegenerateVarianceError(
            f"Variance of the aggregate rate vanishes ({denominator!r}), "
            f"{name} is undefined"
        )
    value = numerator / denominator
    if not 0.0 <= value <= 1.0:
        logging.getLogger(HARQNET).warning(
            "%s = %.6g outside [0, 1], clipped", name, value
        )
        value = min(max(value, 0.0), 1.0)
    return value


def _numerator(params: SystemParams, moments: MomentSet, coupling: str) -> float:
    draws = params.block_length * params.streams
    return draws * draws * moments.cross(coupling) - moments.mu_c**2


def block_rcc(params: SystemParams, config: Optional[AnalyticConfig] = None) -> float:
    """Correlation of the aggregate rates C[b1] and C[b2] of two blocks.

    Slots of one block share interferer activity, the two blocks are coupled
    as config.activity_coupling says.
    """
    config = config or AnalyticConfig()
    moments = moment_set(params, config)
    draws = params.block_length * params.streams
    return _correlation(
        _numerator(params, moments, config.activity_coupling),
        draws * (draws - 1),
        draws,
        moments,
        "block_rcc",
    )


def slot_rcc(params: SystemParams, config: Optional[AnalyticConfig] = None) -> float:
    """Correlation of the aggregate rates of two RR slots.

    Does not depend on T; the T^2 factors cancel.
    """
    config = config or AnalyticConfig()
    moments = moment_set(params, config)
    T, S = params.block_length, params.streams
    return _correlation(
        _numerator(params, moments, config.activity_coupling),
        T * T * S * (S - 1),
        T * T * S,
        moments,
        "slot_rcc",
    )


def rcc(params: SystemParams, config: Optional[AnalyticConfig] = None) -> RccResult:
    return RccResult(block_rcc(params, config), slot_rcc(params, config))


def coverage_normal(
    params: SystemParams,
    rate_threshold: Optional[float] = None,
    config: Optional[AnalyticConfig] = None,
) -> float:
    """P{C[b] >= rate_threshold} for a Gaussian C[b] with the exact mean and variance.

    The variance is the second moment of C[b] minus mu_C^2. rate_threshold
    defaults to params.rate_threshold.
    """
    if rate_threshold is None:
        rate_threshold = params.rate_threshold
    # one block only, so the coupling between blocks never enters
    config = (config or AnalyticConfig()).model_copy(
        update={"activity_coupling": "shared"}
    )
    moments = moment_set(params, config)
    draws = params.block_length * params.streams
    variance, scale = _variance(draws * (draws - 1), draws, moments)
    if variance <= _VARIANCE_FLOOR * scale:
        raise DegenerateVarianceError(
            f"Variance of the block rate vanishes ({variance!r})"
        )
    return float(norm.sf(rate_threshold, loc=moments.mu_c, scale=variance**0.5))
