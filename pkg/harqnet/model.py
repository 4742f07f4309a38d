"""LOS/NLOS path-loss model shared by the analytic and Monte Carlo engines.

Transmit power and its equal split over the streams cancel in every SIR, so the
model only carries the distance-dependent gains and line-of-sight
probabilities.
"""

import math
from enum import Enum
from typing import Tuple, Union

import numpy as np
import numpy.typing as npt

from harqnet.config import PathLossParams

FloatOrArray = Union[float, npt.NDArray[np.float64]]


class LinkState(str, Enum):
    LOS = "los"
    NLOS = "nlos"

    @classmethod
    def ordered(cls) -> Tuple["LinkState", "LinkState"]:
        return (cls.LOS, cls.NLOS)


def _umi_los_probability(x: np.ndarray, d0: float, d1: float) -> np.ndarray:
    with np.errstate(divide="ignore"):
        near = np.minimum(np.divide(d0, x, out=np.ones_like(x), where=x > 0), 1.0)
    tail = np.exp(-x / d1)
    return np.where(x <= d0, 1.0, near * (1.0 - tail) + tail)


def los_probability(x: FloatOrArray, plp: PathLossParams) -> FloatOrArray:
    """Probability that a link of length x is line-of-sight.

    Scalars give a float, arrays an array of the same shape.
    """
    distances = np.asarray(x, dtype=float)
    if np.any(distances < 0):
        raise ValueError("Link distances must be non-negative")

    if plp.los_model == "umi":
        probability = _umi_los_probability(distances, plp.d0, plp.d1)
    elif plp.los_model == "nlos_only":
        probability = np.zeros_like(distances)
    else:
        probability = np.ones_like(distances)

    probability = np.clip(probability, 0.0, 1.0)
    if np.ndim(x) == 0:
        return float(probability)
    return probability


def state_probability(
    x: FloatOrArray, state: LinkState, plp: PathLossParams
) -> FloatOrArray:
    p_los = los_probability(x, plp)
    return p_los if state is LinkState.LOS else 1.0 - p_los


def exponent_and_intercept(
    state: LinkState, plp: PathLossParams
) -> Tuple[float, float]:
    if state is LinkState.LOS:
        return plp.alpha_los, plp.phi_los
    return plp.alpha_nlos, plp.phi_nlos


def path_loss_gain(
    x: FloatOrArray, state: LinkState, plp: PathLossParams
) -> FloatOrArray:
    """phi * x^-alpha of the given state; x = 0 is singular and rejected."""
    distances = np.asarray(x, dtype=float)
    if np.any(distances <= 0):
        raise ValueError("Path loss is singular at zero distance, x must be > 0")

    alpha, phi = exponent_and_intercept(state, plp)
    gain = phi * distances ** (-alpha)
    if np.ndim(x) == 0:
        return float(gain)
    return gain


def path_loss_gains(
    x: npt.NDArray[np.float64], is_los: npt.NDArray[np.bool_], plp: PathLossParams
) -> npt.NDArray[np.float64]:
    """Vectorized gains of links with per-link states."""
    return np.where(
        is_los,
        path_loss_gain(x, LinkState.LOS, plp),
        path_loss_gain(x, LinkState.NLOS, plp),
    )


def sample_link_state(
    x: float, plp: PathLossParams, rng: np.random.Generator
) -> LinkState:
    if rng.random() < los_probability(x, plp):
        return LinkState.LOS
    return LinkState.NLOS


def sample_link_states(
    x: npt.NDArray[np.float64], plp: PathLossParams, rng: np.random.Generator
) -> npt.NDArray[np.bool_]:
    """One Bernoulli draw per distance, True meaning line-of-sight."""
    return rng.random(np.shape(x)) < los_probability(np.asarray(x, dtype=float), plp)


class Scheme(str, Enum):
    RR = "RR"
    BIR = "B-IR"


def far_field_distance(plp: PathLossParams) -> float:
    """Distance beyond which ``far_field_coefficients`` describe p_n(x).

    For the UMi model the exponential term exp(-x/d1) is below 1e-17 there.
    """
    if plp.los_model == "umi":
        return 40.0 * plp.d1
    return 0.0


def far_field_coefficients(
    state: LinkState, plp: PathLossParams
) -> Tuple[float, float]:
    """(c0, c1) such that p_state(x) = c0 + c1 / x beyond far_field_distance."""
    if plp.los_model == "umi":
        if state is LinkState.LOS:
            return 0.0, plp.d0
        return 1.0, -plp.d0
    if plp.los_model == "nlos_only":
        return (0.0, 0.0) if state is LinkState.LOS else (1.0, 0.0)
    return (1.0, 0.0) if state is LinkState.LOS else (0.0, 0.0)


def far_field_moment(
    state: LinkState, plp: PathLossParams, x_hi: float, gamma: float
) -> float:
    """int_{x_hi}^inf x p_state(x) x^-gamma dx, for x_hi >= far_field_distance."""
    if x_hi < far_field_distance(plp):
        raise ValueError(
            f"Far-field expansion needs x >= {far_field_distance(plp)}, got {x_hi}"
        )
    c0, c1 = far_field_coefficients(state, plp)
    total = 0.0
    if c0:
        if gamma <= 2:
            raise ValueError(f"Far-field moment diverges for exponent {gamma} <= 2")
        total += c0 * x_hi ** (2.0 - gamma) / (gamma - 2.0)
    if c1:
        if gamma <= 1:
            raise ValueError(f"Far-field moment diverges for exponent {gamma} <= 1")
        total += c1 * x_hi ** (1.0 - gamma) / (gamma - 1.0)
    return total


def near_field_state(plp: PathLossParams) -> LinkState:
    """The state every link is in when it is short enough."""
    if plp.los_model == "nlos_only":
        return LinkState.NLOS
    return LinkState.LOS


def near_field_distance(plp: PathLossParams) -> float:
    """Distance below which links are in ``near_field_state`` with certainty."""
    if plp.los_model == "umi":
        return plp.d0
    return math.inf
