from typing import Literal

from pydantic import BaseModel, Field


class QuadratureSpec(BaseModel, extra="forbid", frozen=True):  # type: ignore
    rel_tol: float = Field(
        default=1e-6, gt=0, description="Relative tolerance of adaptive quadrature."
    )
    abs_tol: float = Field(
        default=1e-10, gt=0, description="Absolute tolerance of adaptive quadrature."
    )
    max_subdivisions: int = Field(
        default=200,
        ge=1,
        description="Maximum number of interval subdivisions per axis.",
    )
    transform: Literal["none", "log_substitution"] = Field(
        default="log_substitution",
        description="""Variable change applied to (0, inf) integrals.

none: integrate f directly on (0, inf).

log_substitution: integrate f(e^u) e^u over the real line; suited to
integrands spread over many decades.
""",
    )
    panel_width: float = Field(
        default=1.0,
        gt=0,
        le=2,
        description="Width, in log-distance units, of the fixed Gauss-Legendre "
        "panels used for the radial integrals over the interferer field and "
        "for the inner axis of double integrals.",
    )
    panel_order: int = Field(
        default=16,
        ge=2,
        le=64,
        description="Number of Gauss-Legendre nodes per radial panel.",
    )
