import math

import numpy as np
import pytest

from harqnet.config import QuadratureSpec
from harqnet.quadrature import (
    DivergentIntegralError,
    QuadratureError,
    integrate_double_semi_infinite,
    integrate_semi_infinite,
    integrate_semi_infinite_vectorized,
    log_panel_rule,
)


@pytest.mark.parametrize(
    "f, expected",
    [
        (lambda v: math.exp(-v), 1.0),
        (lambda v: 1.0 / (1.0 + v * v), math.pi / 2),
        (lambda v: math.exp(-1e-3 * v) * 1e-3, 1.0),
    ],
)
def test_integrate_semi_infinite(f, expected):
    result = integrate_semi_infinite(f)
    assert result.value == pytest.approx(expected, rel=1e-5)
    assert result.evaluations > 0


def test_plain_transform():
    spec = QuadratureSpec(transform="none")
    result = integrate_semi_infinite(lambda v: math.exp(-v), spec)
    assert result.value == pytest.approx(1.0, rel=1e-8)


def test_zero_integrand():
    assert integrate_semi_infinite(lambda v: 0.0).value == 0.0


@pytest.mark.parametrize(
    "f, side",
    [
        (lambda v: 1.0 / (1.0 + v), "infinity"),
        (lambda v: v**-1.5 * math.exp(-v), "zero"),
    ],
)
def test_divergent_integrand(f, side):
    with pytest.raises(DivergentIntegralError, match=side):
        integrate_semi_infinite(f)


@pytest.mark.parametrize(
    "f, expected",
    [
        (lambda v: math.exp(-v) / math.sqrt(v), math.sqrt(math.pi)),
        (lambda v: (1.0 + v) ** -1.5, 2.0),
        (lambda v: 1.0 / ((1.0 + v) * math.sqrt(v)), math.pi),
    ],
    ids=["root_singularity", "algebraic_tail", "both_ends"],
)
def test_slowly_decaying_integrand_widens_the_bracket(f, expected):
    assert integrate_semi_infinite(f).value == pytest.approx(expected, rel=1e-5)
    vectorized = integrate_semi_infinite_vectorized(np.vectorize(f))
    assert vectorized.value == pytest.approx(expected, rel=1e-6)


def test_non_finite_integrand():
    with pytest.raises(DivergentIntegralError):
        integrate_semi_infinite(lambda v: math.nan)


def test_unconverged_quadrature_keeps_partial_estimate():
    spec = QuadratureSpec(
        transform="none", max_subdivisions=1, rel_tol=1e-12, abs_tol=1e-14
    )
    with pytest.raises(QuadratureError) as e:
        integrate_semi_infinite(
            lambda v: math.exp(-v) * abs(math.sin(50.0 * v)), spec
        )
    assert math.isfinite(e.value.estimate)
    assert e.value.error > 0
    assert not isinstance(e.value, DivergentIntegralError)


def test_vectorized_integral():
    result = integrate_semi_infinite_vectorized(lambda v: np.exp(-v))
    assert result.value == pytest.approx(1.0, rel=1e-9)

    result = integrate_semi_infinite_vectorized(lambda v: 1.0 / (1.0 + v * v))
    assert result.value == pytest.approx(math.pi / 2, rel=1e-9)


def test_vectorized_divergent_integral():
    with pytest.raises(DivergentIntegralError):
        integrate_semi_infinite_vectorized(lambda v: 1.0 / (1.0 + v))


def test_double_integral():
    result = integrate_double_semi_infinite(lambda v1, v2: np.exp(-v1 - 2.0 * v2))
    assert result.value == pytest.approx(0.5, rel=1e-5)


def test_double_integral_coupled():
    def f(v1, v2):
        return np.exp(-(v1 + v2)) * (1.0 + v1 * v2)

    # E[(1 + XY)] for independent unit exponentials
    assert integrate_double_semi_infinite(f).value == pytest.approx(2.0, rel=1e-5)


@pytest.mark.parametrize("power", [0, 1, 3, 7])
def test_log_panel_rule_polynomials(power):
    x, w = log_panel_rule(0.5, 40.0, breakpoints=(6.0, 12.0))
    expected = (40.0 ** (power + 1) - 0.5 ** (power + 1)) / (power + 1)
    assert np.dot(w, x**power) == pytest.approx(expected, rel=1e-12)


def test_log_panel_rule_respects_breakpoints():
    spec = QuadratureSpec(panel_width=2.0, panel_order=4)
    x, _ = log_panel_rule(1.0, 100.0, breakpoints=(6.0, 1000.0), spec=spec)
    assert np.all((x > 1.0) & (x < 100.0))
    # the kink at 6 is a panel edge
    x, w = log_panel_rule(
        1.0, 100.0, breakpoints=(6.0,), spec=QuadratureSpec(panel_width=2.0)
    )
    exact = 0.5 * 6.0**2 - 0.5 + 6.0 * (100.0 - 6.0)
    assert np.dot(w, np.minimum(x, 6.0)) == pytest.approx(exact, rel=1e-12)


def test_log_panel_rule_bounds():
    with pytest.raises(ValueError, match="Need 0 < x_lo < x_hi"):
        log_panel_rule(0.0, 1.0)
    with pytest.raises(ValueError):
        log_panel_rule(2.0, 1.0)
