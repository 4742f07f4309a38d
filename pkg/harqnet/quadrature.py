"""Numerical integration over (0, inf) and (0, inf)^2.

Outer integrals over Laplace arguments use adaptive Gauss-Kronrod quadrature
(``scipy.integrate.quad``) after the substitution v = e^u, on a window found
by bracketing the integrand on a coarse grid. Radial integrals over the
interferer field use a fixed composite Gauss-Legendre rule in log-distance,
which evaluates a whole vector of nodes in one numpy call; the same rule
serves as the inner axis of double integrals.
"""

import math
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple, Optional, Tuple

import numpy as np
from scipy import integrate

from harqnet.config import QuadratureSpec

__all__ = [
    "DivergentIntegralError",
    "QuadratureError",
    "QuadratureResult",
    "QuadratureSpec",
    "integrate_double_semi_infinite",
    "integrate_semi_infinite",
    "integrate_semi_infinite_vectorized",
    "log_panel_rule",
]

# bracketing grid in u = log(v), widened up to |u| = _BRACKET_LIMIT
_BRACKET_LOW = -60.0
_BRACKET_HIGH = 60.0
_BRACKET_STEP = 1.0
_BRACKET_WIDENING = 60.0
_BRACKET_LIMIT = 240.0
# integrand values below this fraction of the peak are treated as zero
_NEGLIGIBLE = 1e-14


class QuadratureError(RuntimeError):
    """Quadrature did not reach the requested tolerance."""

    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(f"{message} (estimate={estimate!r}, error={error!r})")
        self.estimate = estimate
        self.error = error


class DivergentIntegralError(QuadratureError):
    """The integrand does not decay at an end of the domain."""


class QuadratureResult(NamedTuple):
    value: float
    error: float
    evaluations: int


def _tolerance(value: float, spec: QuadratureSpec) -> float:
    return max(spec.abs_tol, spec.rel_tol * abs(value))


def _quad(
    f: Callable[[float], float],
    lower: float,
    upper: float,
    spec: QuadratureSpec,
    points: Optional[Iterable[float]] = None,
) -> QuadratureResult:
    kwargs = {}
    limit = spec.max_subdivisions
    if points is not None:
        points = list(points)
        if points:
            kwargs["points"] = points
            limit = max(limit, len(points) + 1)

    out = integrate.quad(
        f,
        lower,
        upper,
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        limit=limit,
        full_output=1,
        **kwargs,
    )
    value, error, info = float(out[0]), float(out[1]), out[2]
    if not math.isfinite(value):
        raise DivergentIntegralError("Integral is not finite", value, error)
    if len(out) > 3 and error > _tolerance(value, spec):
        raise QuadratureError(
            f"Quadrature did not converge after {spec.max_subdivisions} "
            f"subdivisions: {out[3]}",
            value,
            error,
        )
    return QuadratureResult(value, error, int(info["neval"]))


def _bracket_grid(low: float, high: float) -> np.ndarray:
    return np.arange(low, high + _BRACKET_STEP / 2, _BRACKET_STEP)


def _magnitudes(g: Callable[[np.ndarray], np.ndarray], grid: np.ndarray) -> np.ndarray:
    values = np.abs(np.asarray(g(grid), dtype=float))
    if not np.all(np.isfinite(values)):
        raise DivergentIntegralError(
            "Integrand is not finite on the bracketing grid", math.nan, math.inf
        )
    return values


def _bracket(
    g: Callable[[np.ndarray], np.ndarray]
) -> Tuple[Optional[Tuple[float, float, np.ndarray]], int]:
    """Window of u outside of which |g| is negligible, with the grid inside it.

    The grid is widened by _BRACKET_WIDENING at an end where g is still
    significant, up to |u| = _BRACKET_LIMIT, so slowly decaying algebraic
    tails are kept. Returns None for the window when g vanishes on the whole
    grid, together with the number of evaluations of g.
    """
    grid = _bracket_grid(_BRACKET_LOW, _BRACKET_HIGH)
    values = _magnitudes(g, grid)
    while True:
        peak = float(values.max())
        if peak == 0.0:
            return None, len(grid)

        significant = np.nonzero(values > _NEGLIGIBLE * peak)[0]
        first, last = int(significant[0]), int(significant[-1])
        if last == len(grid) - 1:
            if grid[-1] >= _BRACKET_LIMIT:
                raise DivergentIntegralError(
                    "Integrand does not decay towards infinity", math.nan, math.inf
                )
            high = grid[-1]
            extra = _bracket_grid(high + _BRACKET_STEP, high + _BRACKET_WIDENING)
            grid = np.concatenate([grid, extra])
            values = np.concatenate([values, _magnitudes(g, extra)])
        elif first == 0:
            if grid[0] <= -_BRACKET_LIMIT:
                raise DivergentIntegralError(
                    "Integrand does not decay towards zero", math.nan, math.inf
                )
            low = grid[0]
            extra = _bracket_grid(low - _BRACKET_WIDENING, low - _BRACKET_STEP)
            grid = np.concatenate([extra, grid])
            values = np.concatenate([_magnitudes(g, extra), values])
        else:
            lower, upper = float(grid[first - 1]), float(grid[last + 1])
            return (lower, upper, grid[first : last + 1]), len(grid)


def integrate_semi_infinite(
    f: Callable[[float], float], spec: Optional[QuadratureSpec] = None
) -> QuadratureResult:
    """Integrate f over (0, inf).

    Raises QuadratureError, carrying the partial estimate, when the tolerance
    max(abs_tol, rel_tol * |I|) is not met within max_subdivisions, and
    DivergentIntegralError when f does not decay.
    """
    spec = spec or QuadratureSpec()
    if spec.transform == "none":
        return _quad(f, 0.0, math.inf, spec)

    def g(u: float) -> float:
        v = math.exp(u)
        return f(v) * v

    bracket, evaluations = _bracket(lambda grid: [g(float(u)) for u in grid])
    if bracket is None:
        return QuadratureResult(0.0, 0.0, evaluations)
    lower, upper, inner_grid = bracket
    # every eighth grid point seeds the initial subdivision
    result = _quad(g, lower, upper, spec, points=inner_grid[::8])
    return QuadratureResult(
        result.value, result.error, result.evaluations + evaluations
    )


def integrate_semi_infinite_vectorized(
    f: Callable[[np.ndarray], np.ndarray], spec: Optional[QuadratureSpec] = None
) -> QuadratureResult:
    """Integrate f over (0, inf) where f maps an array of v to an array.

    After v = e^u the bracketed window is covered by the composite
    Gauss-Legendre rule of the radial integrals, so f is called a few times
    in total. The fixed rule carries no error estimate; its accuracy is set
    by spec.panel_width and spec.panel_order.
    """
    spec = spec or QuadratureSpec()

    def g(u: np.ndarray) -> np.ndarray:
        v = np.exp(u)
        return np.asarray(f(v)) * v

    bracket, evaluations = _bracket(g)
    if bracket is None:
        return QuadratureResult(0.0, 0.0, evaluations)

    lower, upper, _ = bracket
    v, weights = log_panel_rule(math.exp(lower), math.exp(upper), spec=spec)
    values = np.asarray(f(v))
    if not np.all(np.isfinite(values)):
        raise DivergentIntegralError("Integrand is not finite", math.nan, math.inf)
    return QuadratureResult(float(np.dot(weights, values)), 0.0, evaluations + len(v))


def integrate_double_semi_infinite(
    f: Callable[[float, np.ndarray], np.ndarray],
    spec: Optional[QuadratureSpec] = None,
) -> QuadratureResult:
    """Integrate f(v1, v2) over (0, inf)^2 as an iterated integral.

    f is called with a scalar v1 and an array of v2. The outer axis is
    adaptive, the inner axis uses ``integrate_semi_infinite_vectorized``.
    """
    spec = spec or QuadratureSpec()
    evaluations = [0]

    def inner(v1: float) -> float:
        result = integrate_semi_infinite_vectorized(lambda v2: f(v1, v2), spec)
        evaluations[0] += result.evaluations
        return result.value

    outer = integrate_semi_infinite(inner, spec)
    return QuadratureResult(outer.value, outer.error, evaluations[0])


@lru_cache(maxsize=None)
def _gauss_legendre(order: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def log_panel_rule(
    x_lo: float,
    x_hi: float,
    breakpoints: Iterable[float] = (),
    spec: Optional[QuadratureSpec] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of a composite Gauss-Legendre rule on [x_lo, x_hi].

    Panels are uniform in log(x), no wider than spec.panel_width, and never
    straddle a breakpoint, so integrands with kinks at the breakpoints keep
    full accuracy. The weights include the Jacobian of x = e^s.
    """
    spec = spec or QuadratureSpec()
    if not 0 < x_lo < x_hi:
        raise ValueError(f"Need 0 < x_lo < x_hi, got {x_lo}, {x_hi}")

    s_lo, s_hi = math.log(x_lo), math.log(x_hi)
    cuts = sorted({s_lo, s_hi} | {math.log(b) for b in breakpoints if x_lo < b < x_hi})
    t, w = _gauss_legendre(spec.panel_order)

    edges = []
    for left, right in zip(cuts[:-1], cuts[1:]):
        count = max(1, math.ceil((right - left) / spec.panel_width))
        edges.append(np.linspace(left, right, count + 1)[:-1])
    starts = np.concatenate(edges)
    ends = np.append(starts[1:], s_hi)

    half = 0.5 * (ends - starts)
    mid = 0.5 * (ends + starts)
    s = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    x = np.exp(s)
    weights = (half[:, None] * w[None, :]).ravel() * x
    return x, weights
