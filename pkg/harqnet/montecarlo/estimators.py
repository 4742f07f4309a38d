"""Monte Carlo estimators over independent network realizations.

Every trial draws its realization and fading from its own random stream,
derived from (seed, trial index), and trials are reduced in index order,
so estimates do not depend on the number of workers.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple, TypeVar

import numpy as np

from harqnet.analytic import DegenerateVarianceError, MomentSet, RccResult
from harqnet.config import SimConfig, SystemParams
from harqnet.delay import DelayEstimate, DelayKind
from harqnet.model import Scheme
from harqnet.strings import HARQNET
from harqnet.util import ordered_map

from .fading import draw_rates
from .network import (
    NetworkRealization,
    edge_radius,
    resolve_seed,
    sample_network,
    trial_rng,
)

T = TypeVar("T")

# share of censored realizations above which an MTD estimate is unreliable
CENSORING_LIMIT = 0.01
# normal quantile of the reported 95% confidence intervals
_Z95 = 1.959963984540054


@dataclass(frozen=True)
class CoverageEstimate:
    value: float
    ci_halfwidth: float
    trials: int


def _ci_halfwidth(samples: np.ndarray) -> float:
    if len(samples) < 2:
        return math.nan
    return float(_Z95 * np.std(samples, ddof=1) / math.sqrt(len(samples)))


def _disk_radius(params: SystemParams, sim: SimConfig) -> float:
    return sim.disk_radius or edge_radius(params, sim.edge_tolerance)


def run_trials(
    trial: Callable[[np.random.Generator, NetworkRealization], T],
    params: SystemParams,
    sim: SimConfig,
    workers: int = 1,
) -> List[T]:
    """Sample one realization per trial and apply trial to it, in trial order."""
    seed = resolve_seed(sim.seed)
    radius = _disk_radius(params, sim)

    def one(index: int) -> T:
        rng = trial_rng(seed, index)
        realization = sample_network(params, sim, rng, radius, index)
        return trial(rng, realization)

    return ordered_map(one, range(sim.trials), workers)


def _window(scheme: Scheme, block_length: int) -> Tuple[int, Tuple[int, ...]]:
    """Slots per decoding attempt and their activity groups."""
    if Scheme(scheme) is Scheme.RR:
        return 1, (0,)
    return block_length, (0,) * block_length


def _successes(
    realization: NetworkRealization,
    params: SystemParams,
    scheme: Scheme,
    rate_threshold: float,
    block_length: int,
    draws: int,
    rng: np.random.Generator,
    gain_model: str,
) -> np.ndarray:
    """Outcomes of draws independent attempts, own activity included."""
    _, groups = _window(scheme, block_length)
    own_active = rng.random(draws) < params.activity
    rates = draw_rates(realization, params, rng, draws, groups, gain_model)
    return own_active & (rates.sum(axis=(1, 2)) >= rate_threshold)


def conditional_success_prob(
    realization: NetworkRealization,
    params: SystemParams,
    scheme: Scheme,
    rate_threshold: float,
    block_length: int,
    draws: int,
    rng: np.random.Generator,
    gain_model: str = "marginal",
) -> float:
    """Fraction of the fading and activity draws in which an attempt succeeds.

    An attempt is one slot for RR and one block of T slots for B-IR, and it
    succeeds when the typical transmitter is active and the aggregate rate
    reaches rate_threshold.
    """
    if draws < 1:
        raise ValueError(f"Need at least one fading draw, got {draws}")
    outcomes = _successes(
        realization,
        params,
        scheme,
        rate_threshold,
        block_length,
        draws,
        rng,
        gain_model,
    )
    return float(np.mean(outcomes))


def summarize_delays(
    delays: np.ndarray, censored: int, kind: DelayKind = DelayKind.MONTE_CARLO
) -> DelayEstimate:
    trials = len(delays)
    reliable = censored <= CENSORING_LIMIT * trials
    if not reliable:
        logging.getLogger(HARQNET).warning(
            "%d of %d realizations censored, the delay estimate is unreliable",
            censored,
            trials,
        )
    return DelayEstimate(
        value=float(np.mean(delays)),
        kind=kind,
        ci_halfwidth=_ci_halfwidth(delays),
        censored=censored,
        trials=trials,
        reliable=reliable,
    )


def estimate_mtd(
    params: SystemParams,
    sim: SimConfig,
    scheme: Scheme,
    rate_threshold: float,
    block_length: int = 1,
    workers: int = 1,
) -> DelayEstimate:
    """Mean over realizations of T_eff / max(q, q_floor).

    Realizations with q below the floor are counted as censored.
    """
    slots, _ = _window(scheme, block_length)

    def trial(rng, realization):
        return conditional_success_prob(
            realization,
            params,
            scheme,
            rate_threshold,
            block_length,
            sim.fading_draws_per_realization,
            rng,
            sim.gain_model,
        )

    q = np.array(run_trials(trial, params, sim, workers))
    floor = sim.effective_q_floor
    censored = int(np.sum(q < floor))
    return summarize_delays(slots / np.maximum(q, floor), censored)


def estimate_mtd_trace(
    params: SystemParams,
    sim: SimConfig,
    scheme: Scheme,
    rate_threshold: float,
    block_length: int = 1,
    workers: int = 1,
) -> DelayEstimate:
    """Mean delay of traces that retransmit until the first success.

    Attempts are simulated in batches of M; a trace without success within
    retransmission_cap slots is censored and counted at the cap.
    """
    slots, _ = _window(scheme, block_length)
    max_attempts = max(1, sim.retransmission_cap // slots)
    batch = sim.fading_draws_per_realization

    def trial(rng, realization):
        done = 0
        while done < max_attempts:
            size = min(batch, max_attempts - done)
            outcomes = _successes(
                realization,
                params,
                scheme,
                rate_threshold,
                block_length,
                size,
                rng,
                sim.gain_model,
            )
            hits = np.flatnonzero(outcomes)
            if len(hits):
                return slots * (done + int(hits[0]) + 1), False
            done += size
        return slots * max_attempts, True

    results = run_trials(trial, params, sim, workers)
    delays = np.array([delay for delay, _ in results], dtype=float)
    censored = sum(1 for _, was_censored in results if was_censored)
    return summarize_delays(delays, censored)


def estimate_coverage_curve(
    params: SystemParams,
    sim: SimConfig,
    rate_threshold: float,
    block_lengths: Sequence[int],
    workers: int = 1,
) -> List[CoverageEstimate]:
    """B-IR coverage P{C[b] >= rate_threshold} for several block lengths at once.

    Each draw is one block of max(block_lengths) slots sharing interferer
    activity; the coverage of length T uses its first T slots, so the curve
    is nondecreasing in T draw by draw. The typical link always transmits.
    """
    lengths = [int(t) for t in block_lengths]
    if not lengths or min(lengths) < 1:
        raise ValueError(f"Block lengths must be >= 1, got {block_lengths}")
    longest = max(lengths)
    columns = np.array(lengths) - 1

    def trial(rng, realization):
        rates = draw_rates(
            realization,
            params,
            rng,
            sim.fading_draws_per_realization,
            (0,) * longest,
            sim.gain_model,
        )
        accumulated = np.cumsum(rates.sum(axis=2), axis=1)
        return np.mean(accumulated[:, columns] >= rate_threshold, axis=0)

    per_trial = np.array(run_trials(trial, params, sim, workers))
    return [
        CoverageEstimate(
            value=float(np.mean(per_trial[:, i])),
            ci_halfwidth=_ci_halfwidth(per_trial[:, i]),
            trials=len(per_trial),
        )
        for i in range(len(lengths))
    ]


def estimate_coverage(
    params: SystemParams,
    sim: SimConfig,
    scheme: Scheme,
    rate_threshold: float,
    block_length: int = 1,
    workers: int = 1,
) -> CoverageEstimate:
    """Coverage of one attempt; for RR that is one slot whatever block_length."""
    slots, _ = _window(scheme, block_length)
    return estimate_coverage_curve(params, sim, rate_threshold, [slots], workers)[0]


def _pearson(first: np.ndarray, second: np.ndarray, name: str) -> float:
    if not (np.all(np.isfinite(first)) and np.all(np.isfinite(second))):
        raise DegenerateVarianceError(
            f"Infinite rates without active interferers, {name} is undefined"
        )
    if np.std(first) == 0 or np.std(second) == 0:
        raise DegenerateVarianceError(f"Constant rates, {name} is undefined")
    return float(np.corrcoef(first, second)[0, 1])


def estimate_rcc(
    params: SystemParams,
    sim: SimConfig,
    scheme: Scheme = Scheme.RR,
    workers: int = 1,
) -> RccResult:
    """Sample correlations of aggregate rates over the realization x fading ensemble.

    The two blocks draw interferer activity independently. The two slots do
    so for RR and share it for B-IR, where they lie in one block.
    """
    T = params.block_length
    slot_groups = (0, 1) if Scheme(scheme) is Scheme.RR else (0, 0)

    def trial(rng, realization):
        draws = sim.fading_draws_per_realization
        blocks = draw_rates(
            realization, params, rng, draws, (0,) * T + (1,) * T, sim.gain_model
        ).sum(axis=2)
        slots = draw_rates(
            realization, params, rng, draws, slot_groups, sim.gain_model
        ).sum(axis=2)
        return (
            blocks[:, :T].sum(axis=1),
            blocks[:, T:].sum(axis=1),
            slots[:, 0],
            slots[:, 1],
        )

    samples = run_trials(trial, params, sim, workers)
    columns = [np.concatenate([s[i] for s in samples]) for i in range(4)]
    return RccResult(
        block_rcc=_pearson(columns[0], columns[1], "block_rcc"),
        slot_rcc=_pearson(columns[2], columns[3], "slot_rcc"),
    )


def estimate_rate_moments(
    params: SystemParams, sim: SimConfig, workers: int = 1
) -> MomentSet:
    """Empirical rate moments of one stream.

    Slots 1 and 2 share interferer activity and slot 3 redraws it, giving
    the shared and the independent cross moments.
    """

    def trial(rng, realization):
        rates = draw_rates(
            realization,
            params,
            rng,
            sim.fading_draws_per_realization,
            (0, 0, 1),
            sim.gain_model,
        )
        first = rates[:, 0, :]
        return np.array(
            [
                np.mean(first),
                np.mean(first * rates[:, 1, :]),
                np.mean(first * rates[:, 2, :]),
                np.mean(first**2),
            ]
        )

    means = np.mean(np.array(run_trials(trial, params, sim, workers)), axis=0)
    if not np.all(np.isfinite(means)):
        raise ValueError("Rate moments are infinite: some draws see no interferer")
    mean_rate, cross, cross_independent, same = (float(v) for v in means)
    return MomentSet(
        mu_c=params.block_length * params.streams * mean_rate,
        lambda_cross=cross,
        lambda_same=same,
        mean_stream_rate=mean_rate,
        lambda_cross_independent=cross_independent,
    )
