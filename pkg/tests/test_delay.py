import importlib
import math

import pytest

from harqnet.analytic import mean_block_rate
from harqnet.config import AnalyticConfig, SystemParams
from harqnet.delay import (
    DelayEstimate,
    DelayKind,
    UnboundedDelayError,
    beta_threshold,
    delta,
    mtd_bir,
    mtd_high_mobile,
    mtd_high_mobile_sandwich,
    mtd_rr,
    mtd_sandwich,
)
from harqnet.model import LinkState, Scheme
from tests.utils import LIGHT_ANALYTIC, LIGHT_QUADRATURE

PARAMS = SystemParams(lambda_density=1e-3, activity=0.5, streams=2)


def test_beta_threshold_conventions():
    assert beta_threshold(2.0, 4, 2) == pytest.approx(math.expm1(0.25))
    assert beta_threshold(2.0, 4, 2, "aggregate") == pytest.approx(math.expm1(1.0))
    assert beta_threshold(0.0, 4, 1) == 0.0
    with pytest.raises(ValueError, match="Unknown beta convention"):
        beta_threshold(1.0, 1, 1, "per_slot")
    with pytest.raises(ValueError):
        beta_threshold(-1.0, 1, 1)


def test_delta_argument_checks():
    with pytest.raises(ValueError, match="k must be a negative integer"):
        delta(1, 0, 1.0, LinkState.LOS, PARAMS)
    with pytest.raises(ValueError, match="tau must be >= 1"):
        delta(0, -1, 1.0, LinkState.LOS, PARAMS)


def test_delta_vanishes_without_interferers():
    empty = PARAMS.with_updates(lambda_density=0.0)
    assert delta(1, -1, 1.0, LinkState.LOS, empty) == 0.0
    assert delta(1, -1, 0.0, LinkState.LOS, PARAMS) == 0.0


@pytest.mark.parametrize("k", [-1, -2, -4])
@pytest.mark.parametrize("state", LinkState.ordered())
def test_delta_is_not_positive(k, state):
    value = delta(1, k, 0.5, state, PARAMS, LIGHT_QUADRATURE)
    assert value <= 0.0
    assert math.isfinite(value)


def test_delta_grows_in_magnitude_with_k():
    values = [delta(1, k, 0.5, LinkState.LOS, PARAMS) for k in (-1, -2, -3)]
    assert values[0] > values[1] > values[2]


def test_delta_is_linear_in_density():
    doubled = PARAMS.with_updates(lambda_density=2e-3)
    assert delta(1, -2, 0.5, LinkState.NLOS, doubled) == pytest.approx(
        2.0 * delta(1, -2, 0.5, LinkState.NLOS, PARAMS), rel=1e-12
    )


def test_rr_delay_of_empty_network():
    empty = PARAMS.with_updates(lambda_density=0.0)
    assert mtd_rr(2.0, empty).value == 1.0 / PARAMS.activity
    assert mtd_bir(2.0, 3, empty).value == 3.0 / PARAMS.activity


def test_rr_delay_at_least_one_attempt():
    delay = mtd_rr(2.0, PARAMS, LIGHT_ANALYTIC)
    assert delay.kind is DelayKind.ANALYTIC_APPROX
    assert delay.value >= 1.0 / PARAMS.activity


def test_rr_delay_increases_with_rate_and_density():
    low = mtd_rr(1.0, PARAMS, LIGHT_ANALYTIC).value
    high = mtd_rr(4.0, PARAMS, LIGHT_ANALYTIC).value
    dense = mtd_rr(1.0, PARAMS.with_updates(lambda_density=1e-2), LIGHT_ANALYTIC)
    assert low < high
    assert low < dense.value


def test_bir_with_single_slot_blocks_is_rr():
    for rate in (0.5, 2.0, 6.0):
        assert mtd_bir(rate, 1, PARAMS).value == mtd_rr(rate, PARAMS).value


@pytest.mark.parametrize("T", [1, 2, 3, 4])
def test_rr_sandwich_lower_bound(T):
    lower, upper = mtd_sandwich(2.0, T, PARAMS, LIGHT_ANALYTIC)
    assert lower.kind is DelayKind.LOWER_BOUND
    assert upper.kind is DelayKind.UPPER_BOUND
    assert lower.value <= mtd_bir(2.0, T, PARAMS, LIGHT_ANALYTIC).value
    assert lower.value <= upper.value


@pytest.mark.parametrize(
    "T",
    [
        1,
        2,
        3,
        pytest.param(
            4,
            marks=pytest.mark.xfail(
                reason="the product-form B-IR delay overshoots T D_RR(R) by 13%"
            ),
        ),
    ],
)
def test_rr_sandwich_upper_bound_in_sparse_network(T):
    sparse = SystemParams(lambda_density=1e-4, activity=0.3, streams=2)
    _, upper = mtd_sandwich(2.0, T, sparse, LIGHT_ANALYTIC)
    assert mtd_bir(2.0, T, sparse, LIGHT_ANALYTIC).value <= 1.1 * upper.value


@pytest.mark.integration_test
@pytest.mark.parametrize("rate", [1.0, 2.0, 4.0])
@pytest.mark.parametrize("streams", [1, 2, 4, 8])
@pytest.mark.parametrize("lambda_density", [1e-4, 1e-3])
@pytest.mark.parametrize("activity", [0.3, 0.6])
def test_sandwich_lower_bound_over_the_grid(rate, streams, lambda_density, activity):
    params = SystemParams(
        lambda_density=lambda_density, activity=activity, streams=streams
    )
    lower_bounds = []
    for T in (1, 2, 4, 8):
        try:
            lower = T / (2**T - 1) * mtd_rr(rate / T, params, LIGHT_ANALYTIC).value
        except UnboundedDelayError:
            continue
        lower_bounds.append(lower)
        try:
            delay = mtd_bir(rate, T, params, LIGHT_ANALYTIC)
        except UnboundedDelayError:
            continue
        assert lower <= delay.value
    assert all(b < a for a, b in zip(lower_bounds, lower_bounds[1:]))


def test_sandwich_lower_bound_falls_below_one_slot():
    sparse = SystemParams(lambda_density=1e-4, activity=0.9, streams=2)
    lower, _ = mtd_sandwich(0.1, 6, sparse, LIGHT_ANALYTIC)
    assert lower.value < 1.0


def test_invalid_block_length():
    with pytest.raises(ValueError, match="Block length must be an integer >= 1"):
        mtd_bir(2.0, 0, PARAMS)
    with pytest.raises(ValueError, match="Block length must be an integer >= 1"):
        mtd_sandwich(2.0, 1.5, PARAMS)


def test_always_active_interferers_give_unbounded_delay():
    always_active = PARAMS.with_updates(activity=1.0)
    with pytest.raises(UnboundedDelayError, match="diverges at the receiver"):
        mtd_rr(2.0, always_active)
    with pytest.raises(UnboundedDelayError):
        mtd_bir(2.0, 2, always_active)


@pytest.mark.parametrize("T", [2, 3])
def test_high_mobile_sandwich(T):
    params = PARAMS.with_updates(block_length=1)
    rate = 0.5 * mean_block_rate(params, LIGHT_ANALYTIC)
    lower, upper = mtd_high_mobile_sandwich(rate, T, params, LIGHT_ANALYTIC)
    delay = mtd_high_mobile(rate, T, params, Scheme.BIR, LIGHT_ANALYTIC)
    assert lower.value <= delay.value <= upper.value


def test_high_mobile_rr_ignores_block_length():
    assert (
        mtd_high_mobile(2.0, 4, PARAMS, Scheme.RR, LIGHT_ANALYTIC).value
        == mtd_high_mobile(2.0, 1, PARAMS, Scheme.RR, LIGHT_ANALYTIC).value
    )


def test_high_mobile_delay_without_coverage():
    with pytest.raises(UnboundedDelayError, match="Coverage at rate threshold"):
        mtd_high_mobile(1e4, 1, PARAMS, Scheme.RR, LIGHT_ANALYTIC)


def test_aggregate_convention_raises_the_delay():
    aggregate = AnalyticConfig(quadrature=LIGHT_QUADRATURE, beta_convention="aggregate")
    assert (
        mtd_rr(2.0, PARAMS, aggregate).value > mtd_rr(2.0, PARAMS, LIGHT_ANALYTIC).value
    )


def test_delay_estimate_validation():
    with pytest.raises(ValueError, match="Delay must be positive"):
        DelayEstimate(0.0, DelayKind.ANALYTIC_APPROX)
    with pytest.raises(ValueError, match="below one slot"):
        DelayEstimate(0.5, DelayKind.MONTE_CARLO)
    assert DelayEstimate(0.5, DelayKind.LOWER_BOUND).value == 0.5


def test_scaled_delay_estimate():
    estimate = DelayEstimate(2.0, DelayKind.MONTE_CARLO, ci_halfwidth=0.1, trials=10)
    scaled = estimate.scaled(3.0)
    assert scaled.value == 6.0
    assert scaled.ci_halfwidth == pytest.approx(0.3)
    assert scaled.trials == 10
    assert estimate.scaled(0.1, DelayKind.LOWER_BOUND).kind is DelayKind.LOWER_BOUND


def test_delay_beyond_float_range_is_unbounded(monkeypatch):
    mtd_module = importlib.import_module("harqnet.delay.mtd")
    monkeypatch.setattr(mtd_module, "delta", lambda *args, **kwargs: -1e3)
    with pytest.raises(UnboundedDelayError, match="overflows the floating-point"):
        mtd_rr(2.0, PARAMS)
    with pytest.raises(UnboundedDelayError, match="overflows the floating-point"):
        mtd_bir(2.0, 4, PARAMS)


def test_long_blocks_in_dense_network_are_unbounded():
    dense = SystemParams(lambda_density=1e-3, activity=0.6, streams=4)
    with pytest.raises(UnboundedDelayError):
        mtd_bir(2.0, 8, dense)
