"""Integrals over the distance of the interferers of the Poisson field.

All of them have the form

    sum_n int_0^inf x p_n(x) K_n(x) dx

with a kernel K_n that saturates near the receiver and decays as a power of
x far away. The finite part is covered by ``log_panel_rule``; the piece
below x_lo, where only the near-field state exists, and the piece above
x_hi, where p_n(x) = c0 + c1 / x, are added in closed form.
"""

import math
from typing import Callable, Iterable, Tuple, Union

import numpy as np

from harqnet.config import PathLossParams, QuadratureSpec
from harqnet.model import (
    LinkState,
    far_field_distance,
    far_field_moment,
    near_field_distance,
    state_probability,
)
from harqnet.quadrature import log_panel_rule

ArrayOrFloat = Union[float, np.ndarray]
# kernel(x, state): values of K_state at the radial nodes x, shape (..., len(x))
Kernel = Callable[[np.ndarray, LinkState], np.ndarray]
# tail(state): (A, gamma) with K_state(x) ~ A x^-gamma for large x
Tail = Callable[[LinkState], Tuple[ArrayOrFloat, float]]


def field_window(
    plp: PathLossParams, near_scales: Iterable[float], far_scales: Iterable[float]
) -> Tuple[float, float]:
    """Finite integration range [x_lo, x_hi] of a field integral.

    x_lo never exceeds half the near-field distance and x_hi never falls
    short of the far-field distance, so both closed-form end pieces apply.
    """
    x_lo = min(near_scales)
    near = near_field_distance(plp)
    if math.isfinite(near):
        x_lo = min(x_lo, 0.5 * near)
    x_hi = max(max(far_scales), far_field_distance(plp), 2.0 * x_lo)
    return x_lo, x_hi


def field_integral(
    kernel: Kernel,
    tail: Tail,
    head: ArrayOrFloat,
    plp: PathLossParams,
    x_lo: float,
    x_hi: float,
    spec: QuadratureSpec,
) -> ArrayOrFloat:
    """Sum over link states of int_0^inf x p_n(x) K_n(x) dx.

    head is int_0^x_lo x K(x) dx of the near-field state, supplied by the
    caller since only it knows how K behaves at the origin.
    """
    x, weights = log_panel_rule(x_lo, x_hi, (plp.d0, plp.d1), spec)
    total = head
    for state in LinkState.ordered():
        probability = state_probability(x, state, plp)
        if not np.any(probability):
            continue
        total = total + np.dot(kernel(x, state), weights * x * probability)
        amplitude, gamma = tail(state)
        total = total + amplitude * far_field_moment(state, plp, x_hi, gamma)
    return total
