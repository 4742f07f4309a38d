"""Effective spatial throughput p lambda R / D(R), maximized over a design grid.

The design space (activity p, streams S, rate threshold R) is a small
finite product, so it is searched exhaustively. Points are visited in
increasing (S, p, R) and only a strictly larger throughput replaces the
incumbent, which breaks ties towards smaller S, then p, then R whatever the
order of the grids.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import List, Optional, Tuple

import pandas as pd

from harqnet.config import AnalyticConfig, DesignGrid, SimConfig, SystemParams
from harqnet.delay import UnboundedDelayError, mtd_bir, mtd_rr
from harqnet.model import Scheme
from harqnet.montecarlo import estimate_mtd
from harqnet.quadrature import QuadratureError
from harqnet.strings import ANALYTIC, HARQNET, MONTE_CARLO
from harqnet.util import ordered_map

TABLE_COLUMNS = [
    "streams",
    "activity",
    "rate_threshold",
    "delay",
    "est",
    "valid",
    "error",
]


class NoValidDesignError(RuntimeError):
    """Every point of the design grid failed to evaluate."""


@dataclass(frozen=True)
class EstResult:
    """Optimized throughput and where it is attained.

    argmax is (p, S, R); per_point_table has one row per grid point in
    visiting order, with the columns of TABLE_COLUMNS.
    """

    est: float
    argmax: Tuple[float, int, float]
    scheme: Scheme
    per_point_table: pd.DataFrame
    block_length: int
    lambda_density: float
    delay: float


@lru_cache(maxsize=65536)
def _analytic_delay(
    scheme: Scheme, block_length: int, params: SystemParams, config: AnalyticConfig
) -> float:
    if scheme is Scheme.RR:
        return mtd_rr(params.rate_threshold, params, config).value
    return mtd_bir(params.rate_threshold, block_length, params, config).value


@lru_cache(maxsize=65536)
def _simulated_delay(
    scheme: Scheme, block_length: int, params: SystemParams, sim: SimConfig
) -> float:
    return estimate_mtd(params, sim, scheme, params.rate_threshold, block_length).value


def _evaluate(
    point: Tuple[int, float, float],
    base: SystemParams,
    scheme: Scheme,
    delay_backend: str,
    config: AnalyticConfig,
    sim: Optional[SimConfig],
) -> dict:
    streams, activity, rate = point
    row = {
        "streams": streams,
        "activity": activity,
        "rate_threshold": rate,
        "delay": float("nan"),
        "est": float("nan"),
        "valid": False,
        "error": "",
    }
    try:
        params = base.with_updates(
            streams=streams, activity=activity, rate_threshold=rate
        )
        if delay_backend == ANALYTIC:
            delay = _analytic_delay(scheme, base.block_length, params, config)
        else:
            delay = _simulated_delay(scheme, base.block_length, params, sim)
    except (QuadratureError, UnboundedDelayError, ArithmeticError, ValueError) as err:
        row["error"] = f"{type(err).__name__}: {err}"
        return row
    row.update(
        delay=delay,
        est=activity * base.lambda_density * rate / delay,
        valid=True,
    )
    return row


def optimize_est(
    block_length: int,
    lambda_density: float,
    grid: DesignGrid,
    scheme: Scheme,
    delay_backend: str = ANALYTIC,
    params: Optional[SystemParams] = None,
    config: Optional[AnalyticConfig] = None,
    sim: Optional[SimConfig] = None,
    workers: int = 1,
) -> EstResult:
    """Maximize p lambda R / D(R) over the grid for one scheme.

    D is mtd_rr or mtd_bir (analytic backend) or estimate_mtd (monte_carlo
    backend). Failed points are recorded as invalid; NoValidDesignError is
    raised only when all of them fail.
    """
    if delay_backend not in (ANALYTIC, MONTE_CARLO):
        raise ValueError(f"Unknown delay backend {delay_backend}")
    scheme = Scheme(scheme)
    config = config or AnalyticConfig()
    if delay_backend == MONTE_CARLO:
        sim = sim or SimConfig()
    T = 1 if scheme is Scheme.RR else int(block_length)
    base = (params or SystemParams()).with_updates(
        lambda_density=lambda_density, block_length=T
    )
    points: List[Tuple[int, float, float]] = list(
        product(
            sorted(grid.streams_for(base)),
            sorted(grid.activity_grid),
            sorted(grid.rate_grid),
        )
    )

    rows = ordered_map(
        lambda point: _evaluate(point, base, scheme, delay_backend, config, sim),
        points,
        workers,
    )
    best = None
    for row in rows:
        if not row["valid"]:
            logging.getLogger(HARQNET).warning(
                "Design point S=%d p=%g R=%g failed: %s",
                row["streams"],
                row["activity"],
                row["rate_threshold"],
                row["error"],
            )
            continue
        if best is None or row["est"] > best["est"]:
            best = row
    if best is None:
        raise NoValidDesignError(
            f"All {len(points)} design points failed for {scheme.value} at "
            f"T={T}, lambda={lambda_density}"
        )

    return EstResult(
        est=best["est"],
        argmax=(best["activity"], best["streams"], best["rate_threshold"]),
        scheme=scheme,
        per_point_table=pd.DataFrame(rows, columns=TABLE_COLUMNS),
        block_length=T,
        lambda_density=lambda_density,
        delay=best["delay"],
    )


def throughput_gain(
    block_length: int,
    lambda_density: float,
    grid: DesignGrid,
    delay_backend: str = ANALYTIC,
    params: Optional[SystemParams] = None,
    config: Optional[AnalyticConfig] = None,
    sim: Optional[SimConfig] = None,
    workers: int = 1,
) -> float:
    """Optimized B-IR throughput with blocks of T over optimized RR throughput."""
    kwargs = dict(
        delay_backend=delay_backend,
        params=params,
        config=config,
        sim=sim,
        workers=workers,
    )
    bir = optimize_est(block_length, lambda_density, grid, Scheme.BIR, **kwargs)
    rr = optimize_est(1, lambda_density, grid, Scheme.RR, **kwargs)
    if rr.est <= 0:
        raise NoValidDesignError(
            f"RR throughput is zero at lambda={lambda_density}, the gain is undefined"
        )
    return bir.est / rr.est
