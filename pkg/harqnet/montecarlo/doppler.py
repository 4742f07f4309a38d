"""Delay under time-correlated fading.

Each link's channel matrix follows the first-order Gauss-Markov model
H[t] = eta H[t-1] + sqrt(1 - eta^2) W[t] with eta = J0(2 pi f_d T_s) from
Clarke's model, f_d = v f_c / c. Zero-forcing gains are recomputed from the
evolved matrices every slot, and the delay is measured on
retransmit-until-success traces.
"""

import math

import numpy as np
from scipy import special

from harqnet.config import DopplerConfig, SimConfig, SystemParams
from harqnet.delay import DelayEstimate
from harqnet.model import Scheme
from harqnet.strings import SPEED_OF_LIGHT

from .estimators import run_trials, summarize_delays
from .fading import complex_gaussian, zf_gains

# slots simulated per batch, rounded up to whole blocks
_BATCH_SLOTS = 16


def doppler_coefficient(speed: float, carrier: float, slot_duration: float) -> float:
    """Slot-to-slot correlation J0(2 pi (v f_c / c) T_s)."""
    doppler_shift = speed * carrier / SPEED_OF_LIGHT
    return float(special.j0(2.0 * math.pi * doppler_shift * slot_duration))


class _GaussMarkovChannel:
    def __init__(self, shape, eta: float, rng: np.random.Generator):
        self.eta = eta
        self.innovation = math.sqrt(max(0.0, 1.0 - eta**2))
        self.rng = rng
        self.shape = shape
        self.state = complex_gaussian(rng, shape)

    def advance(self, slots: int) -> np.ndarray:
        """Channel of the next slots, shape (slots,) + shape."""
        out = np.empty((slots,) + self.shape, dtype=complex)
        for t in range(slots):
            out[t] = self.state
            fresh = complex_gaussian(self.rng, self.shape)
            self.state = self.eta * self.state + self.innovation * fresh
        return out


def simulate_doppler_mtd(
    params: SystemParams,
    sim: SimConfig,
    doppler: DopplerConfig,
    scheme: Scheme,
    rate_threshold: float,
    block_length: int = 1,
    workers: int = 1,
) -> DelayEstimate:
    """Mean delay of traces over Gauss-Markov fading.

    RR attempts are single slots with fresh interferer activity; a B-IR
    attempt is a block of T slots sharing activity. Traces without success
    within retransmission_cap slots are censored.
    """
    scheme = Scheme(scheme)
    slots_per_attempt = 1 if scheme is Scheme.RR else int(block_length)
    attempts_per_batch = max(1, math.ceil(_BATCH_SLOTS / slots_per_attempt))
    batch_slots = attempts_per_batch * slots_per_attempt
    max_attempts = max(1, sim.retransmission_cap // slots_per_attempt)

    eta = doppler_coefficient(doppler.speed, doppler.carrier, doppler.slot_duration)
    interferer_speed = (
        doppler.speed if doppler.interferer_speed is None else doppler.interferer_speed
    )
    eta_interferers = doppler_coefficient(
        interferer_speed, doppler.carrier, doppler.slot_duration
    )
    antennas, streams = params.rx_antennas, params.streams

    def trial(rng, realization):
        count = realization.count
        gains = realization.interferer_gains(params.path_loss)
        serving_gain = realization.serving_gain(params)
        serving = _GaussMarkovChannel((antennas, streams), eta, rng)
        interferers = _GaussMarkovChannel(
            (count, antennas, streams), eta_interferers, rng
        )

        done = 0
        while done < max_attempts:
            size = min(attempts_per_batch, max_attempts - done)
            slots = size * slots_per_attempt
            intended, interfering = zf_gains(
                serving.advance(slots), interferers.advance(slots)
            )
            own_active = rng.random(size) < params.activity
            active = rng.random((size, count)) < params.activity
            weights = np.repeat(active, slots_per_attempt, axis=0) * gains
            interference = np.einsum("tsn,tn->ts", interfering, weights)
            with np.errstate(divide="ignore"):
                rates = np.log1p(serving_gain * intended / interference)
            per_attempt = rates.sum(axis=1).reshape(size, slots_per_attempt).sum(axis=1)
            hits = np.flatnonzero(own_active & (per_attempt >= rate_threshold))
            if len(hits):
                return slots_per_attempt * (done + int(hits[0]) + 1), False
            done += size
        return slots_per_attempt * max_attempts, True

    results = run_trials(trial, params, sim, workers)
    delays = np.array([delay for delay, _ in results], dtype=float)
    censored = sum(1 for _, was_censored in results if was_censored)
    return summarize_delays(delays, censored)
