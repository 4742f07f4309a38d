"""Laplace functionals of the interference from the thinned Poisson field.

The Laplace transform of the aggregate interference at argument v is
exp(-2 pi lambda p theta1(v)); theta2 is the joint functional of two slots
that see the same active interferers with independent fading, and theta3
the one of two arguments acting on the same fading draw.
"""

import math
from typing import Optional

import numpy as np

from harqnet.config import QuadratureSpec, SystemParams
from harqnet.model import LinkState, exponent_and_intercept

from .radial import field_integral, field_window

# x_lo = x_c e^-18: the kernel equals 1 to double precision below
_NEAR_EFOLDS = 18.0
# x_hi = x_c e^(23/alpha): first neglected tail term is ~e^-23 relative
_FAR_EFOLDS = 23.0


def _one_minus_power(a: np.ndarray, streams: int) -> np.ndarray:
    """1 - (1 + a)^-S without cancellation for small a."""
    return -np.expm1(-streams * np.log1p(a))


def laplace_exponent(
    v1: np.ndarray,
    v2: np.ndarray,
    params: SystemParams,
    spec: Optional[QuadratureSpec] = None,
) -> np.ndarray:
    """Vectorized theta2(v1, v2) for broadcastable arrays of arguments >= 0.

    Written as (1 - A1) + A1 (1 - A2) so that v2 = 0 reproduces theta1(v1)
    bit for bit.
    """
    spec = spec or QuadratureSpec()
    v1, v2 = np.broadcast_arrays(
        np.atleast_1d(np.asarray(v1, dtype=float)),
        np.atleast_1d(np.asarray(v2, dtype=float)),
    )
    if np.any(v1 < 0) or np.any(v2 < 0):
        raise ValueError("Laplace arguments must be non-negative")

    result = np.zeros(v1.shape)
    active = (v1 + v2) > 0
    if not np.any(active):
        return result
    a_args, b_args = v1[active], v2[active]

    plp = params.path_loss
    streams = params.streams
    positive = np.concatenate([a_args[a_args > 0], b_args[b_args > 0]])
    v_min, v_max = float(positive.min()), float(positive.max())
    near_scales, far_scales = [], []
    for state in LinkState.ordered():
        alpha, phi = exponent_and_intercept(state, plp)
        near_scales.append((v_min * phi) ** (1 / alpha) * math.exp(-_NEAR_EFOLDS))
        far_scales.append((v_max * phi) ** (1 / alpha) * math.exp(_FAR_EFOLDS / alpha))
    x_lo, x_hi = field_window(plp, near_scales, far_scales)

    def kernel(x: np.ndarray, state: LinkState) -> np.ndarray:
        alpha, phi = exponent_and_intercept(state, plp)
        attenuation = phi * x ** (-alpha)
        first = _one_minus_power(a_args[:, None] * attenuation, streams)
        second = _one_minus_power(b_args[:, None] * attenuation, streams)
        return first + (1.0 - first) * second

    def tail(state: LinkState):
        alpha, phi = exponent_and_intercept(state, plp)
        return streams * phi * (a_args + b_args), alpha

    head = 0.5 * x_lo**2
    result[active] = field_integral(kernel, tail, head, plp, x_lo, x_hi, spec)
    return result


def theta1(
    v: float, params: SystemParams, spec: Optional[QuadratureSpec] = None
) -> float:
    """sum_n int_0^inf x p_n(x) (1 - (1 + v phi_n x^-alpha_n)^-S) dx."""
    return float(laplace_exponent(v, 0.0, params, spec)[0])


def theta2(
    v1: float,
    v2: float,
    params: SystemParams,
    spec: Optional[QuadratureSpec] = None,
) -> float:
    """Joint functional with kernel 1 - (1 + v1 y)^-S (1 + v2 y)^-S, y = phi x^-alpha.

    Symmetric in its arguments and never below theta3(v1, v2), since
    (1 + v1 y)(1 + v2 y) >= 1 + (v1 + v2) y.
    """
    return float(laplace_exponent(v1, v2, params, spec)[0])


def theta3(
    v1: float,
    v2: float,
    params: SystemParams,
    spec: Optional[QuadratureSpec] = None,
) -> float:
    """theta1 at the combined argument v1 + v2."""
    return theta1(v1 + v2, params, spec)
