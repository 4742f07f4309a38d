"""Poisson bipolar network realizations around the typical receiver."""

import logging
import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from harqnet.config import PathLossParams, SimConfig, SystemParams
from harqnet.model import (
    LinkState,
    exponent_and_intercept,
    far_field_distance,
    far_field_moment,
    path_loss_gain,
    path_loss_gains,
    sample_link_state,
    sample_link_states,
    state_probability,
)
from harqnet.quadrature import log_panel_rule
from harqnet.strings import HARQNET, SEED_ENV_VAR

MAX_DISK_RADIUS = 10_000.0
# radii tried by edge_radius grow by this factor
_RADIUS_STEP = 2.0 ** (1 / 8)


@dataclass(frozen=True, eq=False)
class NetworkRealization:
    """The frozen part of one network: interferer positions and link states.

    realization_seed is the trial index whose random stream produced it.
    """

    distances: np.ndarray
    is_los: np.ndarray
    serving_state: LinkState
    realization_seed: int
    radius: float
    angles: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def count(self) -> int:
        return len(self.distances)

    @property
    def interferers(self) -> List[Tuple[float, LinkState]]:
        return [
            (float(d), LinkState.LOS if los else LinkState.NLOS)
            for d, los in zip(self.distances, self.is_los)
        ]

    def interferer_gains(self, plp: PathLossParams) -> np.ndarray:
        if self.count == 0:
            return np.zeros(0)
        return path_loss_gains(self.distances, self.is_los, plp)

    def serving_gain(self, params: SystemParams) -> float:
        return path_loss_gain(
            params.link_distance, self.serving_state, params.path_loss
        )


def resolve_seed(seed: Optional[int]) -> int:
    """The configured seed, else HARQNET_SEED, else a fresh random seed."""
    if seed is not None:
        return seed
    from_env = os.environ.get(SEED_ENV_VAR)
    if from_env:
        try:
            return int(from_env)
        except ValueError as err:
            raise ValueError(
                f"{SEED_ENV_VAR} must be a non-negative integer, got {from_env!r}"
            ) from err
    random_seed = int(np.random.SeedSequence().entropy % 2**63)
    logging.getLogger(HARQNET).info("Using random seed: %d", random_seed)
    return random_seed


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Random stream of one trial, independent of how trials are scheduled."""
    return np.random.default_rng([seed, index])


def _field_moment(plp: PathLossParams, lower: float, upper: float = math.inf) -> float:
    """sum_n int_lower^upper x p_n(x) phi_n x^-alpha_n dx."""
    split = min(upper, max(lower, far_field_distance(plp)))
    total = 0.0
    if split > lower:
        x, weights = log_panel_rule(lower, split, (plp.d0, plp.d1))
        for state in LinkState.ordered():
            density = state_probability(x, state, plp) * path_loss_gain(x, state, plp)
            total += float(np.dot(weights, x * density))
    if math.isinf(upper):
        for state in LinkState.ordered():
            alpha, phi = exponent_and_intercept(state, plp)
            total += phi * far_field_moment(state, plp, split, alpha)
    return total


@lru_cache(maxsize=256)
def edge_radius(
    params: SystemParams,
    rel_tol: float = 1e-2,
    max_radius: float = MAX_DISK_RADIUS,
) -> float:
    """Smallest disk radius whose excluded interferers barely matter.

    Interferers beyond R lower the conditional success probability by the
    factor exp(-delta(R)), to first order in the interference they add, with
    delta(R) = 2 pi lambda p S v int_R^inf x p_n(x) phi_n x^-alpha_n dx and
    v = beta / L(r) the Laplace argument at the RR threshold. The radius is
    the first one of a geometric grid with delta(R) <= rel_tol, capped at
    max_radius.
    """
    plp = params.path_loss
    minimum = 4.0 * params.link_distance
    beta = math.expm1(params.rate_threshold / params.streams)
    serving = sum(
        state_probability(params.link_distance, state, plp)
        * path_loss_gain(params.link_distance, state, plp)
        for state in LinkState.ordered()
    )
    coefficient = (
        2.0 * math.pi * params.lambda_density * params.activity * params.streams
    ) * (beta / serving)
    if coefficient == 0:
        return minimum

    radius = minimum
    while radius < max_radius:
        if coefficient * _field_moment(plp, radius) <= rel_tol:
            return radius
        radius *= _RADIUS_STEP
    logging.getLogger(HARQNET).warning(
        "Edge effects exceed %g at the largest disk radius %g m", rel_tol, max_radius
    )
    return max_radius


def sample_network(
    params: SystemParams,
    sim: SimConfig,
    rng: np.random.Generator,
    radius: Optional[float] = None,
    realization_seed: int = 0,
) -> NetworkRealization:
    """Poisson number of interferers, uniform on the disk, each with a link state.

    The serving link gets its own state draw. The order of the draws is
    fixed so that a seed determines the realization.
    """
    if radius is None:
        radius = sim.disk_radius or edge_radius(params, sim.edge_tolerance)
    plp = params.path_loss
    count = rng.poisson(params.lambda_density * math.pi * radius**2)
    # 1 - U lies in (0, 1], so every distance is positive
    distances = radius * np.sqrt(1.0 - rng.random(count))
    angles = rng.uniform(0.0, 2.0 * math.pi, count)
    is_los = sample_link_states(distances, plp, rng)
    serving_state = sample_link_state(params.link_distance, plp, rng)
    return NetworkRealization(
        distances=distances,
        is_los=is_los,
        serving_state=serving_state,
        realization_seed=realization_seed,
        radius=radius,
        angles=angles,
    )
