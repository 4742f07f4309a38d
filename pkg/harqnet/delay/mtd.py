"""Mean transmission delay of RR and B-IR in a low-mobility network.

The interferer geometry is frozen over retransmissions, so the delay is
the mean over geometries of 1 / P{success | geometry}. The analytic forms
below replace that mean by the product-form approximation built on Delta.
"""

import math
from typing import Optional, Tuple

from harqnet.analytic import DegenerateVarianceError, coverage_normal
from harqnet.config import AnalyticConfig, SystemParams
from harqnet.model import LinkState, Scheme, state_probability
from harqnet.quadrature import DivergentIntegralError

from .delta import beta_threshold, delta
from .estimate import DelayEstimate, DelayKind, UnboundedDelayError


def _check_block_length(block_length: int) -> None:
    if int(block_length) != block_length or block_length < 1:
        raise ValueError(f"Block length must be an integer >= 1, got {block_length}")


def _product_form_delay(
    params: SystemParams, beta: float, slots: int, k: int, config: AnalyticConfig
) -> float:
    """(slots / p) sum_n p_n(r) exp(-2 pi Delta_{1,k}(S, beta)), n the serving state."""
    if params.lambda_density == 0:
        return slots / params.activity

    total = 0.0
    for state in LinkState.ordered():
        weight = state_probability(params.link_distance, state, params.path_loss)
        if weight == 0:
            continue
        try:
            exponent = delta(1, k, beta, state, params, config.quadrature)
        except DivergentIntegralError as err:
            raise UnboundedDelayError(str(err)) from err
        try:
            total += weight * math.exp(-2.0 * math.pi * exponent)
        except OverflowError as err:
            raise UnboundedDelayError(
                f"Delay overflows the floating-point range, Delta = {exponent:.6g}"
            ) from err
    value = slots / params.activity * total
    if not math.isfinite(value):
        raise UnboundedDelayError(f"Delay overflows the floating-point range: {value}")
    return value


def mtd_rr(
    rate_threshold: float,
    params: SystemParams,
    config: Optional[AnalyticConfig] = None,
) -> DelayEstimate:
    """Delay of repetitive retransmission: (1/p) sum_n p_n(r) e^{-2 pi Delta_{1,-1}}."""
    config = config or AnalyticConfig()
    beta = beta_threshold(
        rate_threshold, params.streams, 1, config.beta_convention
    )
    value = _product_form_delay(params, beta, 1, -1, config)
    return DelayEstimate(value, DelayKind.ANALYTIC_APPROX)


def mtd_bir(
    rate_threshold: float,
    block_length: int,
    params: SystemParams,
    config: Optional[AnalyticConfig] = None,
) -> DelayEstimate:
    """Delay of blocked incremental redundancy with blocks of T slots.

    Uses sum_n (T p_n(r) / p) e^{-2 pi Delta_{1,-T}(S, beta_T)}, which leans
    towards an upper bound of the delay, and equals mtd_rr at T = 1.
    """
    _check_block_length(block_length)
    config = config or AnalyticConfig()
    T = int(block_length)
    beta = beta_threshold(rate_threshold, params.streams, T, config.beta_convention)
    value = _product_form_delay(params, beta, T, -T, config)
    return DelayEstimate(value, DelayKind.ANALYTIC_APPROX)


def mtd_sandwich(
    rate_threshold: float,
    block_length: int,
    params: SystemParams,
    config: Optional[AnalyticConfig] = None,
) -> Tuple[DelayEstimate, DelayEstimate]:
    """B-IR delay bounds from RR: T D_RR(R/T) / (2^T - 1) and T D_RR(R)."""
    _check_block_length(block_length)
    T = int(block_length)
    shifted = mtd_rr(rate_threshold / T, params, config)
    full = mtd_rr(rate_threshold, params, config)
    lower = shifted.scaled(T / (2**T - 1), DelayKind.LOWER_BOUND)
    upper = full.scaled(T, DelayKind.UPPER_BOUND)
    return lower, upper


def mtd_high_mobile(
    rate_threshold: float,
    block_length: int,
    params: SystemParams,
    scheme: Scheme,
    config: Optional[AnalyticConfig] = None,
) -> DelayEstimate:
    """Delay when the geometry is redrawn every attempt: T / q (1 / q for RR).

    q is the normal-approximation coverage of one block (one slot for RR).
    """
    _check_block_length(block_length)
    slots = 1 if Scheme(scheme) is Scheme.RR else int(block_length)
    try:
        coverage = coverage_normal(
            params.with_updates(block_length=slots), rate_threshold, config
        )
    except DegenerateVarianceError as err:
        raise UnboundedDelayError(str(err)) from err
    if coverage <= 0:
        raise UnboundedDelayError(
            f"Coverage at rate threshold {rate_threshold} is zero, the delay is "
            f"unbounded"
        )
    return DelayEstimate(slots / coverage, DelayKind.ANALYTIC_APPROX)


def mtd_high_mobile_sandwich(
    rate_threshold: float,
    block_length: int,
    params: SystemParams,
    config: Optional[AnalyticConfig] = None,
) -> Tuple[DelayEstimate, DelayEstimate]:
    """(T / 2^T) D_RR(R/T) and T D_RR(R/T)^T, D_RR the high-mobile RR delay."""
    _check_block_length(block_length)
    T = int(block_length)
    shifted = mtd_high_mobile(rate_threshold / T, 1, params, Scheme.RR, config)
    lower = shifted.scaled(T / 2**T, DelayKind.LOWER_BOUND)
    upper = DelayEstimate(T * shifted.value**T, DelayKind.UPPER_BOUND)
    return lower, upper
