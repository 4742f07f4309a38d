"""Law of the ratio of an interfering to an intended zero-forcing gain."""

import math
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np
from scipy import integrate, special

from harqnet.config import SystemParams

FloatOrArray = Union[float, np.ndarray]


@dataclass(frozen=True)
class BetaPrimeLaw:
    """Law of X / Y for independent X ~ Gamma(shape_num), Y ~ Gamma(shape_den).

    Its density is z^(a-1) (1 + z)^-(a+b) / B(a, b) with a = shape_num and
    b = shape_den.
    """

    shape_num: float
    shape_den: float

    def __post_init__(self):
        if self.shape_num < 1 or self.shape_den < 1:
            raise ValueError(
                f"Beta prime shapes must be >= 1, got "
                f"({self.shape_num}, {self.shape_den})"
            )

    @classmethod
    def interference_to_signal(cls, params: SystemParams) -> "BetaPrimeLaw":
        """Law of G/H, the per-stream interfering gain over the intended gain.

        G has S degrees of freedom (in units of 2), H has S' = Nr - S + 1.
        """
        return cls(shape_num=params.streams, shape_den=params.diversity_order)

    @property
    def log_beta(self) -> float:
        return float(special.betaln(self.shape_num, self.shape_den))

    def pdf(self, x: FloatOrArray) -> FloatOrArray:
        x = np.asarray(x, dtype=float)
        a, b = self.shape_num, self.shape_den
        with np.errstate(divide="ignore", invalid="ignore"):
            log_density = (a - 1) * np.log(x) - (a + b) * np.log1p(x) - self.log_beta
        at_zero = math.exp(-self.log_beta) if a == 1 else 0.0
        density = np.where(x > 0, np.exp(log_density), at_zero)
        density = np.where(x < 0, 0.0, density)
        return float(density) if density.ndim == 0 else density

    def cdf(self, x: FloatOrArray) -> FloatOrArray:
        x = np.asarray(x, dtype=float)
        with np.errstate(invalid="ignore"):
            u = np.where(np.isinf(x), 1.0, x / (1.0 + x))
        value = special.betainc(self.shape_num, self.shape_den, u)
        return float(value) if np.ndim(value) == 0 else value

    def sf(self, x: FloatOrArray) -> FloatOrArray:
        """1 - cdf(x), accurate in the upper tail."""
        x = np.asarray(x, dtype=float)
        value = special.betainc(self.shape_den, self.shape_num, 1.0 / (1.0 + x))
        return float(value) if np.ndim(value) == 0 else value


def beta_prime_cdf(
    x: float,
    law: BetaPrimeLaw,
    method: Literal["incomplete_beta", "quadrature"] = "incomplete_beta",
) -> float:
    """P{X/Y <= x} under law.

    The regularized incomplete beta function at u = x / (1 + x) is the
    default; quadrature of the density is kept as an independent check.
    """
    if x < 0:
        raise ValueError(f"Beta prime threshold must be >= 0, got {x}")
    if method == "incomplete_beta":
        return law.cdf(x)
    if x == 0:
        return 0.0
    if math.isinf(x):
        return 1.0
    # the density is integrated in u = x / (1 + x) where it is a beta density
    a, b = law.shape_num, law.shape_den
    value, _ = integrate.quad(
        lambda u: math.exp(
            (a - 1) * math.log(u) + (b - 1) * math.log1p(-u) - law.log_beta
        )
        if 0 < u < 1
        else 0.0,
        0.0,
        x / (1.0 + x),
        epsabs=1e-13,
        epsrel=1e-10,
        limit=200,
    )
    return min(max(value, 0.0), 1.0)
