"""The Delta functional of the product-form delay approximation.

For a serving link in state n at distance r and an interferer at distance x
in state n', a stream fails when the interfering-to-intended gain ratio
G/H exceeds y = phi_n x^alpha_n' / (beta phi_n' r^alpha_n). With F the law
of G/H, the product-form approximation gives

    Delta_{tau,k} = lambda sum_n' int_0^inf x p_n'(x)
                    (1 - (p F(y)^(S tau) + 1 - p)^k) dx,

which is <= 0 for k <= -1.
"""

import math
from typing import Optional

import numpy as np
from scipy import special

from harqnet.analytic.radial import field_integral, field_window
from harqnet.config import QuadratureSpec, SystemParams
from harqnet.model import (
    LinkState,
    exponent_and_intercept,
    near_field_state,
    path_loss_gain,
)
from harqnet.quadrature import DivergentIntegralError

from .beta_prime import BetaPrimeLaw

# y_lo = e^(-40/S): the S tau-th power of F is below e^-40 there
_NEAR_LOG_RATIO = 40.0
# y_hi = e^(30/S'): the tail of F is below e^-30 there
_FAR_LOG_RATIO = 30.0


def beta_threshold(
    rate_threshold: float, streams: int, window: int, convention: str = "per_stream"
) -> float:
    """SIR threshold of one stream when the rate is spread over a window of slots.

    per_stream: exp(R / (S window)) - 1; aggregate: exp(R / window) - 1.
    """
    if rate_threshold < 0:
        raise ValueError(f"Rate threshold must be >= 0, got {rate_threshold}")
    if convention == "per_stream":
        return math.expm1(rate_threshold / (streams * window))
    if convention == "aggregate":
        return math.expm1(rate_threshold / window)
    raise ValueError(f"Unknown beta convention {convention}")


def delta(
    tau: int,
    k: int,
    beta: float,
    serving_state: LinkState,
    params: SystemParams,
    spec: Optional[QuadratureSpec] = None,
) -> float:
    """Evaluate Delta_{tau,k}(S, beta) for the given serving-link state.

    Raises DivergentIntegralError when every interferer is always active
    (p = 1) and the integrand is not integrable at the receiver.
    """
    if k > -1:
        raise ValueError(f"k must be a negative integer, got {k}")
    if tau < 1:
        raise ValueError(f"tau must be >= 1, got {tau}")
    if beta < 0:
        raise ValueError(f"beta must be >= 0, got {beta}")
    if params.lambda_density == 0 or beta == 0:
        return 0.0

    spec = spec or QuadratureSpec()
    plp = params.path_loss
    law = BetaPrimeLaw.interference_to_signal(params)
    a, b = law.shape_num, law.shape_den
    m = params.streams * tau
    p = params.activity
    serving_gain = path_loss_gain(params.link_distance, serving_state, plp)

    # y = c x^alpha for an interferer in each state
    coefficients = {}
    near_scales, far_scales = [], []
    for state in LinkState.ordered():
        alpha, phi = exponent_and_intercept(state, plp)
        c = serving_gain / (beta * phi)
        coefficients[state] = c
        scale = c ** (-1.0 / alpha)
        near_scales.append(scale * math.exp(-_NEAR_LOG_RATIO / (a * alpha)))
        far_scales.append(scale * math.exp(_FAR_LOG_RATIO / (b * alpha)))
    x_lo, x_hi = field_window(plp, near_scales, far_scales)

    def kernel(x: np.ndarray, state: LinkState) -> np.ndarray:
        alpha, _ = exponent_and_intercept(state, plp)
        y = coefficients[state] * x**alpha
        cdf = law.cdf(y)
        with np.errstate(divide="ignore"):
            log_cdf = np.where(cdf < 0.5, np.log(cdf), np.log1p(-law.sf(y)))
        if p == 1.0:
            log_inner = m * log_cdf
        else:
            log_inner = np.log1p(p * np.expm1(m * log_cdf))
        return -np.expm1(k * log_inner)

    def tail(state: LinkState):
        alpha, _ = exponent_and_intercept(state, plp)
        c = coefficients[state]
        amplitude = k * p * m * math.exp(-b * math.log(c) - math.log(b) - law.log_beta)
        return amplitude, alpha * b

    head = _near_field_head(x_lo, k, m, p, coefficients, law, plp)
    return params.lambda_density * float(
        field_integral(kernel, tail, head, plp, x_lo, x_hi, spec)
    )


def _near_field_head(x_lo, k, m, p, coefficients, law, plp) -> float:
    """int_0^x_lo x (1 - (p F^m + 1 - p)^k) dx for the near-field state."""
    if p < 1.0:
        return 0.5 * x_lo**2 * -math.expm1(k * math.log1p(-p))

    # with p = 1 the kernel is 1 - F^(mk), F(y) ~ y^a / (a B(a, b)) near zero
    state = near_field_state(plp)
    alpha, _ = exponent_and_intercept(state, plp)
    a = law.shape_num
    exponent = alpha * a * m * k
    if 2.0 + exponent <= 0:
        raise DivergentIntegralError(
            "Delay integral diverges at the receiver when every interferer is "
            "always active",
            math.inf,
            math.inf,
        )
    log_factor = m * k * (
        a * math.log(coefficients[state]) - math.log(a) - law.log_beta
    )
    power = math.exp(log_factor + (2.0 + exponent) * math.log(x_lo))
    return 0.5 * x_lo**2 - power / (2.0 + exponent)
