import math

import numpy as np
import pytest
from scipy.stats import norm

from harqnet.config import ShortPacketConfig, SystemParams
from harqnet.montecarlo import (
    dispersion_coefficient,
    required_rate,
    simulate_short_packet_mtd,
)
from tests.utils import small_sim

PARAMS = SystemParams(lambda_density=1e-3, activity=0.5, streams=2)
SHORT = ShortPacketConfig(bits=25.0, bandwidth=5e4, slot_duration=5e-4)


def test_dispersion_coefficient_limits():
    values = dispersion_coefficient(np.array([0.0, 0.5, 3.0, 1e3, math.inf]))
    assert values[0] == 0.0
    assert values[-1] == 1.0
    assert np.all(np.diff(values) > 0)
    assert values[1] == pytest.approx(math.sqrt(1 - 1 / 1.5**2))


def test_required_rate():
    sir = np.array([[1.0, 3.0], [math.inf, math.inf]])
    rates = required_rate(sir, SHORT)
    penalty = norm.isf(SHORT.error_target) / math.sqrt(SHORT.channel_uses)
    assert rates.shape == (2,)
    assert np.all(rates > SHORT.rate_floor)
    assert rates[1] == pytest.approx(SHORT.rate_floor + 2 * penalty)


def test_short_packets_wait_longer():
    sim = small_sim(trials=30)
    short = simulate_short_packet_mtd(PARAMS, sim, SHORT)
    long = simulate_short_packet_mtd(PARAMS, sim, SHORT, long_packet=True)
    # same draws, stricter decoding event
    assert short.value >= long.value
    assert long.value >= 1.0


def test_even_odds_target_removes_the_penalty():
    even = SHORT.model_copy(update={"error_target": 0.5})
    sim = small_sim(trials=20)
    assert (
        simulate_short_packet_mtd(PARAMS, sim, even).value
        == simulate_short_packet_mtd(PARAMS, sim, even, long_packet=True).value
    )


def test_more_bits_raise_the_delay():
    sim = small_sim(trials=30)
    small = simulate_short_packet_mtd(PARAMS, sim, SHORT)
    large = simulate_short_packet_mtd(
        PARAMS, sim, SHORT.model_copy(update={"bits": 75.0})
    )
    assert large.value >= small.value


def test_short_packet_delay_does_not_depend_on_workers():
    sim = small_sim(trials=12)
    assert (
        simulate_short_packet_mtd(PARAMS, sim, SHORT).value
        == simulate_short_packet_mtd(PARAMS, sim, SHORT, workers=3).value
    )
