import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from harqnet.config import PathLossParams
from harqnet.model import (
    LinkState,
    far_field_coefficients,
    far_field_distance,
    far_field_moment,
    los_probability,
    path_loss_gain,
    path_loss_gains,
    sample_link_states,
    state_probability,
)

UMI = PathLossParams()


def test_near_links_are_line_of_sight():
    assert los_probability(0.0, UMI) == 1.0
    assert los_probability(UMI.d0, UMI) == 1.0
    assert los_probability(np.array([1.0, 3.0, 6.0]), UMI).tolist() == [1.0] * 3


def test_umi_formula():
    x = 30.0
    tail = math.exp(-x / UMI.d1)
    expected = (UMI.d0 / x) * (1 - tail) + tail
    assert los_probability(x, UMI) == pytest.approx(expected, rel=1e-14)


@given(st.floats(min_value=0.0, max_value=1e5, allow_nan=False))
def test_los_probability_is_a_probability(x):
    p = los_probability(x, UMI)
    assert 0.0 <= p <= 1.0
    assert state_probability(x, LinkState.LOS, UMI) + state_probability(
        x, LinkState.NLOS, UMI
    ) == pytest.approx(1.0)


@given(
    st.floats(min_value=6.0, max_value=1e4),
    st.floats(min_value=1.0, max_value=100.0),
)
def test_los_probability_decreases_beyond_near_field(x, step):
    assert los_probability(x + step, UMI) <= los_probability(x, UMI) + 1e-15


def test_single_slope_models():
    nlos = PathLossParams(los_model="nlos_only")
    los = PathLossParams(los_model="los_only", alpha_los=2.5)
    distances = np.array([1.0, 10.0, 1000.0])
    assert np.all(los_probability(distances, nlos) == 0.0)
    assert np.all(los_probability(distances, los) == 1.0)


def test_negative_distance():
    with pytest.raises(ValueError, match="non-negative"):
        los_probability(-1.0, UMI)


def test_path_loss_gain():
    assert path_loss_gain(10.0, LinkState.LOS, UMI) == pytest.approx(10.0**-2.09)
    assert path_loss_gain(10.0, LinkState.NLOS, UMI) == pytest.approx(10.0**-3.75)
    with pytest.raises(ValueError, match="singular at zero distance"):
        path_loss_gain(0.0, LinkState.LOS, UMI)


def test_path_loss_gains_follow_states():
    x = np.array([10.0, 10.0])
    gains = path_loss_gains(x, np.array([True, False]), UMI)
    assert gains[0] == path_loss_gain(10.0, LinkState.LOS, UMI)
    assert gains[1] == path_loss_gain(10.0, LinkState.NLOS, UMI)


def test_sampled_link_states_match_probability():
    rng = np.random.default_rng(5)
    x = np.full(200_000, 20.0)
    fraction = np.mean(sample_link_states(x, UMI, rng))
    assert fraction == pytest.approx(los_probability(20.0, UMI), abs=5e-3)


@pytest.mark.parametrize("state", LinkState.ordered())
def test_far_field_coefficients(state):
    x = np.array([1.0, 2.0, 10.0]) * far_field_distance(UMI)
    c0, c1 = far_field_coefficients(state, UMI)
    np.testing.assert_allclose(
        state_probability(x, state, UMI), c0 + c1 / x, rtol=1e-14, atol=1e-16
    )


@pytest.mark.parametrize("state", LinkState.ordered())
def test_far_field_moment_matches_quadrature(state):
    x_hi = far_field_distance(UMI)
    gamma = 3.75
    expected, _ = integrate.quad(
        lambda x: x * state_probability(x, state, UMI) * x**-gamma,
        x_hi,
        np.inf,
        epsrel=1e-10,
    )
    assert far_field_moment(state, UMI, x_hi, gamma) == pytest.approx(
        expected, rel=1e-7
    )


def test_far_field_moment_inside_the_far_field_only():
    with pytest.raises(ValueError, match="Far-field expansion needs"):
        far_field_moment(LinkState.NLOS, UMI, 10.0, 3.75)


def test_far_field_moment_diverges():
    with pytest.raises(ValueError, match="diverges"):
        far_field_moment(LinkState.NLOS, UMI, far_field_distance(UMI), 2.0)
