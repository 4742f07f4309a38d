import importlib
import math

import pytest

from harqnet.analytic import (
    DegenerateVarianceError,
    MomentSet,
    block_rcc,
    clear_moment_cache,
    coverage_normal,
    lambda_cross,
    lambda_cross_independent,
    lambda_same,
    mean_block_rate,
    mean_stream_rate,
    moment_set,
    rcc,
    slot_rcc,
)
from harqnet.config import AnalyticConfig, SystemParams
from harqnet.quadrature import DivergentIntegralError
from tests.utils import LIGHT_ANALYTIC, LIGHT_QUADRATURE

PARAMS = SystemParams(lambda_density=1e-3, activity=0.5, streams=2)
SHARED = AnalyticConfig(quadrature=LIGHT_QUADRATURE, activity_coupling="shared")


def test_mean_block_rate_scales_with_block():
    params = PARAMS.with_updates(block_length=3)
    assert mean_block_rate(params, LIGHT_ANALYTIC) == (
        3 * 2 * mean_stream_rate(PARAMS, LIGHT_ANALYTIC)
    )


def test_moments_ignore_block_length_and_rate():
    params = PARAMS.with_updates(block_length=4, rate_threshold=5.0)
    assert mean_stream_rate(params, LIGHT_ANALYTIC) == mean_stream_rate(
        PARAMS, LIGHT_ANALYTIC
    )
    assert lambda_cross(params, LIGHT_ANALYTIC) == lambda_cross(PARAMS, LIGHT_ANALYTIC)


def test_moment_ordering():
    mean = mean_stream_rate(PARAMS, LIGHT_ANALYTIC)
    cross = lambda_cross(PARAMS, LIGHT_ANALYTIC)
    same = lambda_same(PARAMS, LIGHT_ANALYTIC)
    assert 0 < mean < math.inf
    # shared interferers correlate the two slots positively
    assert mean**2 < cross < same


def test_independent_activity_lowers_cross_moment():
    shared = lambda_cross(PARAMS, LIGHT_ANALYTIC)
    independent = lambda_cross_independent(PARAMS, LIGHT_ANALYTIC)
    assert mean_stream_rate(PARAMS, LIGHT_ANALYTIC) ** 2 < independent <= shared


def test_denser_network_lowers_the_rate():
    denser = PARAMS.with_updates(lambda_density=1e-2)
    assert mean_stream_rate(denser, LIGHT_ANALYTIC) < mean_stream_rate(
        PARAMS, LIGHT_ANALYTIC
    )


def test_block_and_slot_rcc_agree_for_single_slot_blocks():
    assert block_rcc(PARAMS, LIGHT_ANALYTIC) == slot_rcc(PARAMS, LIGHT_ANALYTIC)


def test_slot_rcc_does_not_depend_on_block_length():
    reference = slot_rcc(PARAMS, LIGHT_ANALYTIC)
    for T in (2, 5):
        params = PARAMS.with_updates(block_length=T)
        assert slot_rcc(params, LIGHT_ANALYTIC) == pytest.approx(reference, rel=1e-9)


def test_block_rcc_grows_with_block_length():
    values = [
        block_rcc(PARAMS.with_updates(block_length=T), LIGHT_ANALYTIC)
        for T in (1, 2, 4, 8)
    ]
    assert all(0.0 <= v <= 1.0 for v in values)
    assert all(b >= a for a, b in zip(values, values[1:]))
    assert values[0] == slot_rcc(PARAMS, LIGHT_ANALYTIC)


def test_rcc_bundles_both():
    result = rcc(PARAMS.with_updates(block_length=2), LIGHT_ANALYTIC)
    assert result.slot_rcc <= result.block_rcc


def test_independent_coupling_lowers_block_rcc():
    params = PARAMS.with_updates(block_length=2)
    assert block_rcc(params, LIGHT_ANALYTIC) <= block_rcc(params, SHARED)
    assert slot_rcc(params, LIGHT_ANALYTIC) <= slot_rcc(params, SHARED)
    assert moment_set(params, LIGHT_ANALYTIC).lambda_cross_independent is not None
    assert moment_set(params, SHARED).lambda_cross_independent is None


def test_activity_is_redrawn_between_blocks_by_default():
    assert AnalyticConfig().activity_coupling == "independent"
    params = PARAMS.with_updates(block_length=2)
    moments = moment_set(params, LIGHT_ANALYTIC)
    draws = 2 * PARAMS.streams
    numerator = draws**2 * moments.lambda_cross_independent - moments.mu_c**2
    denominator = (
        draws * (draws - 1) * moments.lambda_cross
        + draws * moments.lambda_same
        - moments.mu_c**2
    )
    assert block_rcc(params, LIGHT_ANALYTIC) == pytest.approx(
        numerator / denominator, rel=1e-12
    )


def test_empty_network_has_no_finite_moments():
    with pytest.raises(DivergentIntegralError):
        block_rcc(PARAMS.with_updates(lambda_density=0.0), LIGHT_ANALYTIC)


def test_coverage_normal():
    params = PARAMS.with_updates(block_length=2)
    mu_c = mean_block_rate(params, LIGHT_ANALYTIC)
    assert coverage_normal(params, mu_c, LIGHT_ANALYTIC) == pytest.approx(0.5)
    values = [
        coverage_normal(params, fraction * mu_c, LIGHT_ANALYTIC)
        for fraction in (0.25, 0.5, 1.5, 3.0)
    ]
    assert all(0.0 <= v <= 1.0 for v in values)
    assert all(b < a for a, b in zip(values, values[1:]))


def test_coverage_normal_defaults_to_params_threshold():
    params = PARAMS.with_updates(rate_threshold=3.0)
    assert coverage_normal(params, config=LIGHT_ANALYTIC) == coverage_normal(
        params, 3.0, LIGHT_ANALYTIC
    )


def test_degenerate_variance(monkeypatch):
    # two streams with perfectly correlated constant rates
    degenerate = MomentSet(
        mu_c=2.0,
        lambda_cross=1.0,
        lambda_same=1.0,
        mean_stream_rate=1.0,
        lambda_cross_independent=1.0,
    )
    rcc_module = importlib.import_module("harqnet.analytic.rcc")
    monkeypatch.setattr(
        rcc_module, "moment_set", lambda params, config=None: degenerate
    )
    with pytest.raises(DegenerateVarianceError, match="block_rcc is undefined"):
        block_rcc(PARAMS)
    with pytest.raises(DegenerateVarianceError):
        coverage_normal(PARAMS, 1.0)


def test_moment_set_validation():
    with pytest.raises(ValueError, match="lambda_same must be finite"):
        MomentSet(
            mu_c=1.0, lambda_cross=1.0, lambda_same=math.inf, mean_stream_rate=1.0
        )
    moments = MomentSet(
        mu_c=1.0, lambda_cross=1.0, lambda_same=2.0, mean_stream_rate=0.5
    )
    with pytest.raises(ValueError, match="Independent-activity cross moment"):
        moments.cross("independent")


def test_clear_moment_cache():
    first = mean_stream_rate(PARAMS, LIGHT_ANALYTIC)
    clear_moment_cache()
    assert mean_stream_rate(PARAMS, LIGHT_ANALYTIC) == first


@pytest.mark.integration_test
@pytest.mark.parametrize(
    "config", [LIGHT_ANALYTIC, SHARED], ids=["independent", "shared"]
)
@pytest.mark.parametrize("streams", [1, 2, 4, 8])
@pytest.mark.parametrize("lambda_density", [1e-4, 1e-3])
@pytest.mark.parametrize("activity", [0.3, 0.6])
def test_block_rcc_dominates_slot_rcc_over_the_grid(
    config, streams, lambda_density, activity
):
    params = SystemParams(
        lambda_density=lambda_density, activity=activity, streams=streams
    )
    results = [
        rcc(params.with_updates(block_length=T), config) for T in (1, 2, 4, 8)
    ]
    assert results[0].block_rcc == pytest.approx(results[0].slot_rcc, rel=1e-12)
    tolerance = 1e-12
    for result in results:
        assert 0.0 <= result.slot_rcc <= result.block_rcc + tolerance
        assert result.block_rcc <= 1.0
    for previous, current in zip(results, results[1:]):
        assert current.block_rcc >= previous.block_rcc - tolerance
        assert current.block_rcc / current.slot_rcc >= (
            previous.block_rcc / previous.slot_rcc - tolerance
        )
