from typing import Literal

from pydantic import BaseModel, Field

from .quadrature_config import QuadratureSpec


class AnalyticConfig(BaseModel, extra="forbid", frozen=True):  # type: ignore
    quadrature: QuadratureSpec = Field(
        default_factory=QuadratureSpec,
        description="Numerical integration settings.",
    )
    beta_convention: Literal["per_stream", "aggregate"] = Field(
        default="per_stream",
        description="""SIR threshold used by the delay approximations for a
window of tau slots.

per_stream: exp(R / (S tau)) - 1, the rate threshold shared by S streams.

aggregate: exp(R / tau) - 1, kept for sensitivity studies.
""",
    )
    activity_coupling: Literal["shared", "independent"] = Field(
        default="independent",
        description="""Interferer activity assumed between the two correlated
slots (RR) or blocks (B-IR). Streams of one slot, and slots of one B-IR block,
always share it.

independent: activity is redrawn per slot or per block, as in the network
model and the Monte Carlo engine.

shared: an interferer is active in both or in none, which reproduces the
closed forms that reuse the within-slot cross moment.
""",
    )
