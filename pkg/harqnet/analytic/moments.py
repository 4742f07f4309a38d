"""First and second moments of the per-stream rate R = log(1 + SIR).

Every moment is an integral over Laplace arguments of the form

    E[log(1 + X/Y)] = int_0^inf (1 - E e^{-vX}) E e^{-vY} / v dv,

with the serving-link factor averaged over its line-of-sight state and the
interference factor given by the theta functionals. The moments do not
depend on the block length or the rate threshold, so they are cached per
system parameters with those two fields normalized away.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from harqnet.config import AnalyticConfig, QuadratureSpec, SystemParams
from harqnet.model import LinkState, path_loss_gain, state_probability
from harqnet.quadrature import (
    integrate_double_semi_infinite,
    integrate_semi_infinite,
)

from .theta import laplace_exponent, theta1

# below this Laplace argument the serving factor is replaced by its limit
_SMALL_ARGUMENT = 1e-12
# below this product of argument and gain the same-draw kernel uses its series
_SERIES_ARGUMENT = 1e-6


@dataclass(frozen=True)
class MomentSet:
    """Rate moments of one stream and the block mean they imply.

    mu_c is the mean block rate T S E[R]; lambda_cross is E[R_1[1] R_2[2]]
    when both slots see the same active interferers and lambda_same is
    E[R_1[1]^2]. lambda_cross_independent, when computed, is the cross
    moment of two slots whose interferer activity is drawn independently.
    """

    mu_c: float
    lambda_cross: float
    lambda_same: float
    mean_stream_rate: float
    lambda_cross_independent: Optional[float] = None

    def __post_init__(self):
        for name in ("mu_c", "lambda_cross", "lambda_same", "mean_stream_rate"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and non-negative, got {value}")

    def cross(self, activity_coupling: str = "shared") -> float:
        if activity_coupling == "shared":
            return self.lambda_cross
        if self.lambda_cross_independent is None:
            raise ValueError("Independent-activity cross moment was not computed")
        return self.lambda_cross_independent


def _moment_key(params: SystemParams) -> SystemParams:
    return params.model_copy(update={"block_length": 1, "rate_threshold": 0.0})


def _serving_links(params: SystemParams) -> List[Tuple[float, float]]:
    """(p_n(r), phi_n r^-alpha_n) of the states the serving link can be in."""
    links = []
    for state in LinkState.ordered():
        weight = state_probability(params.link_distance, state, params.path_loss)
        if weight > 0:
            gain = path_loss_gain(params.link_distance, state, params.path_loss)
            links.append((weight, gain))
    return links


def _damping_rate(params: SystemParams) -> float:
    return 2.0 * math.pi * params.lambda_density * params.activity


def _serving_factor(v: np.ndarray, gain: float, order: int) -> np.ndarray:
    """(1 - (1 + v L)^-S') / v, continued by S' L at v = 0."""
    v = np.asarray(v, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        value = -np.expm1(-order * np.log1p(v * gain)) / v
    return np.where(v < _SMALL_ARGUMENT, order * gain, value)


def _same_draw_factor(
    v1: np.ndarray, v2: np.ndarray, gain: float, order: int
) -> np.ndarray:
    """(1 - a(v1) - a(v2) + a(v1 + v2)) / (v1 v2), a(v) = (1 + v L)^-S'."""
    x1, x2 = np.broadcast_arrays(
        np.asarray(v1, dtype=float) * gain, np.asarray(v2, dtype=float) * gain
    )

    def one_minus(x, shape):
        return -np.expm1(-shape * np.log1p(x))

    small, big = np.minimum(x1, x2), np.maximum(x1, x2)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = (
            one_minus(x1, order) + one_minus(x2, order) - one_minus(x1 + x2, order)
        ) / (x1 * x2)
        # E[(1 - e^-sH)(1 - e^-bH)] to second order in s, H ~ Gamma(S')
        first = order * one_minus(big, order + 1)
        second = order * (order + 1) * one_minus(big, order + 2)
        series = (first - 0.5 * small * second) / big
    return gain**2 * np.where(small < _SERIES_ARGUMENT, series, direct)


@lru_cache(maxsize=512)
def _mean_stream_rate(params: SystemParams, spec: QuadratureSpec) -> float:
    rate = _damping_rate(params)
    links = _serving_links(params)
    order = params.diversity_order

    def integrand(v: float) -> float:
        serving = sum(w * float(_serving_factor(v, gain, order)) for w, gain in links)
        return serving * math.exp(-rate * theta1(v, params, spec))

    return integrate_semi_infinite(integrand, spec).value


@lru_cache(maxsize=512)
def _cross_moment(
    params: SystemParams, spec: QuadratureSpec, activity_coupling: str
) -> float:
    rate = _damping_rate(params)
    p = params.activity
    links = _serving_links(params)
    order = params.diversity_order

    def integrand(v1: float, v2: np.ndarray) -> np.ndarray:
        joint = laplace_exponent(v1, v2, params, spec)
        if activity_coupling == "shared":
            exponent = joint
        else:
            single = theta1(v1, params, spec) + laplace_exponent(v2, 0.0, params, spec)
            exponent = (1.0 - p) * single + p * joint
        serving = sum(
            w * _serving_factor(v1, gain, order) * _serving_factor(v2, gain, order)
            for w, gain in links
        )
        return serving * np.exp(-rate * exponent)

    return integrate_double_semi_infinite(integrand, spec).value


@lru_cache(maxsize=512)
def _same_slot_moment(params: SystemParams, spec: QuadratureSpec) -> float:
    rate = _damping_rate(params)
    links = _serving_links(params)
    order = params.diversity_order

    def integrand(v1: float, v2: np.ndarray) -> np.ndarray:
        exponent = laplace_exponent(v1 + v2, 0.0, params, spec)
        serving = sum(w * _same_draw_factor(v1, v2, gain, order) for w, gain in links)
        return serving * np.exp(-rate * exponent)

    return integrate_double_semi_infinite(integrand, spec).value


def mean_stream_rate(
    params: SystemParams, config: Optional[AnalyticConfig] = None
) -> float:
    """E[R_l], the mean rate of one stream in one slot."""
    config = config or AnalyticConfig()
    return _mean_stream_rate(_moment_key(params), config.quadrature)


def mean_block_rate(
    params: SystemParams, config: Optional[AnalyticConfig] = None
) -> float:
    """mu_C = T S E[R_l]."""
    return params.block_length * params.streams * mean_stream_rate(params, config)


def lambda_cross(
    params: SystemParams, config: Optional[AnalyticConfig] = None
) -> float:
    """E[R_1[1] R_2[2]] for two slots sharing the active interferers."""
    config = config or AnalyticConfig()
    return _cross_moment(_moment_key(params), config.quadrature, "shared")


def lambda_cross_independent(
    params: SystemParams, config: Optional[AnalyticConfig] = None
) -> float:
    """E[R_1[1] R_2[2]] for two slots with independently drawn activity."""
    config = config or AnalyticConfig()
    return _cross_moment(_moment_key(params), config.quadrature, "independent")


def lambda_same(params: SystemParams, config: Optional[AnalyticConfig] = None) -> float:
    """E[R_1[1]^2]."""
    config = config or AnalyticConfig()
    return _same_slot_moment(_moment_key(params), config.quadrature)


def moment_set(
    params: SystemParams, config: Optional[AnalyticConfig] = None
) -> MomentSet:
    config = config or AnalyticConfig()
    independent = None
    if config.activity_coupling == "independent":
        independent = lambda_cross_independent(params, config)
    return MomentSet(
        mu_c=mean_block_rate(params, config),
        lambda_cross=lambda_cross(params, config),
        lambda_same=lambda_same(params, config),
        mean_stream_rate=mean_stream_rate(params, config),
        lambda_cross_independent=independent,
    )


def clear_moment_cache() -> None:
    for cached in (_mean_stream_rate, _cross_moment, _same_slot_moment):
        cached.cache_clear()
