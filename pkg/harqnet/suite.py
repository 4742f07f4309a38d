"""Runs one experiment: every sweep point on every backend, then writes the results.

Output folder layout::

    results.csv          one ResultRow per (sweep point, backend, metric)
    plot_data/*.dat      one two-column series per (metric, backend)
    timing.csv           wall time per (sweep point, backend)
    manifest.yml         the resolved experiment with its provenance
    logs/harqnet.log
"""

from __future__ import annotations

import datetime
import logging
import os
import time
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple, Union

from dateutil import parser as date_parser
from dateutil.tz import tzlocal

from harqnet.analytic import coverage_normal, rcc
from harqnet.config import ExperimentSpec, SimConfig, SystemParams
from harqnet.delay import (
    DelayEstimate,
    mtd_bir,
    mtd_high_mobile,
    mtd_high_mobile_sandwich,
    mtd_rr,
    mtd_sandwich,
)
from harqnet.export import (
    ResultRow,
    write_plot_data,
    write_results_csv,
    write_timing_csv,
)
from harqnet.model import Scheme
from harqnet.montecarlo import (
    estimate_coverage,
    estimate_coverage_curve,
    estimate_mtd,
    estimate_mtd_trace,
    estimate_rcc,
    resolve_seed,
    simulate_doppler_mtd,
    simulate_short_packet_mtd,
)
from harqnet.optimizer import NoValidDesignError, optimize_est, throughput_gain
from harqnet.quadrature import QuadratureError
from harqnet.strings import (
    ANALYTIC,
    HARQNET,
    LOG_DIR,
    LOG_FILE,
    MANIFEST_FILE,
    MONTE_CARLO,
    PLOT_DATA_DIR,
    RESULTS_FILE,
    TIMING_FILE,
)
from harqnet.util import configure_logger, makedirs_if_needed

# failures that invalidate one metric of one sweep point, not the run
POINT_ERRORS = (QuadratureError, ValueError, ArithmeticError, NoValidDesignError)


class Measurement(NamedTuple):
    value: float
    ci_halfwidth: Optional[float] = None


MetricJobs = List[Tuple[str, Callable[[], Any]]]


@dataclass
class _Point:
    spec: ExperimentSpec
    value: Union[int, float]
    backend: str
    params: SystemParams
    sim: SimConfig
    workers: int
    # shared by all points of one run
    cache: Dict[str, Any]

    @property
    def rate(self) -> float:
        return self.params.rate_threshold

    @property
    def block_length(self) -> int:
        return self.params.block_length


def _once(function: Callable[[], Any]) -> Callable[[], Any]:
    return lru_cache(maxsize=1)(function)


def _rcc_jobs(point: _Point) -> MetricJobs:
    if point.backend == ANALYTIC:
        result = _once(lambda: rcc(point.params, point.spec.analytic))
    else:
        # RR slots and B-IR blocks both redraw interferer activity
        result = _once(
            lambda: estimate_rcc(point.params, point.sim, Scheme.RR, point.workers)
        )
    return [
        ("block_rcc", lambda: result().block_rcc),
        ("slot_rcc", lambda: result().slot_rcc),
    ]


def _simulated_coverage(point: _Point) -> Measurement:
    spec = point.spec
    assert spec.sweep is not None
    if spec.sweep.variable != "block_length":
        estimate = estimate_coverage(
            point.params,
            point.sim,
            Scheme.BIR,
            point.rate,
            point.block_length,
            point.workers,
        )
        return Measurement(estimate.value, estimate.ci_halfwidth)

    # one curve over all block lengths keeps it monotone in T draw by draw
    lengths = spec.sweep.typed_values()
    if "coverage_curve" not in point.cache:
        point.cache["coverage_curve"] = estimate_coverage_curve(
            point.params, point.sim, point.rate, lengths, point.workers
        )
    estimate = point.cache["coverage_curve"][lengths.index(point.value)]
    return Measurement(estimate.value, estimate.ci_halfwidth)


def _coverage_jobs(point: _Point) -> MetricJobs:
    if point.backend == ANALYTIC:
        return [
            (
                "coverage",
                lambda: coverage_normal(point.params, None, point.spec.analytic),
            )
        ]
    return [("coverage", lambda: _simulated_coverage(point))]


def _mtd_bounds_jobs(point: _Point) -> MetricJobs:
    R, T, params, config = (
        point.rate,
        point.block_length,
        point.params,
        point.spec.analytic,
    )
    if point.backend == MONTE_CARLO:
        return [
            (
                "mtd_bir",
                lambda: estimate_mtd(
                    params, point.sim, Scheme.BIR, R, T, point.workers
                ),
            )
        ]
    sandwich = _once(lambda: mtd_sandwich(R, T, params, config))
    mobile = _once(lambda: mtd_high_mobile_sandwich(R, T, params, config))
    return [
        ("mtd_bir", lambda: mtd_bir(R, T, params, config)),
        ("mtd_bir_lower", lambda: sandwich()[0]),
        ("mtd_bir_upper", lambda: sandwich()[1]),
        ("mtd_hm_bir", lambda: mtd_high_mobile(R, T, params, Scheme.BIR, config)),
        ("mtd_hm_lower", lambda: mobile()[0]),
        ("mtd_hm_upper", lambda: mobile()[1]),
    ]


def _mtd_jobs(point: _Point) -> MetricJobs:
    R, T, params = point.rate, point.block_length, point.params
    if point.backend == ANALYTIC:
        config = point.spec.analytic
        return [
            ("mtd_rr", lambda: mtd_rr(R, params, config)),
            ("mtd_bir", lambda: mtd_bir(R, T, params, config)),
        ]
    sim, workers = point.sim, point.workers
    jobs: MetricJobs = [
        ("mtd_rr", lambda: estimate_mtd(params, sim, Scheme.RR, R, 1, workers)),
        ("mtd_bir", lambda: estimate_mtd(params, sim, Scheme.BIR, R, T, workers)),
    ]
    if point.spec.kind == "noiseless_check":
        jobs.append(
            (
                "mtd_rr_trace",
                lambda: estimate_mtd_trace(params, sim, Scheme.RR, R, 1, workers),
            )
        )
    return jobs


def _doppler_jobs(point: _Point) -> MetricJobs:
    R, T, params, sim = point.rate, point.block_length, point.params, point.sim
    doppler = point.spec.doppler_at(point.value)
    return [
        (
            "mtd_rr",
            lambda: simulate_doppler_mtd(
                params, sim, doppler, Scheme.RR, R, 1, point.workers
            ),
        ),
        (
            "mtd_bir",
            lambda: simulate_doppler_mtd(
                params, sim, doppler, Scheme.BIR, R, T, point.workers
            ),
        ),
    ]


def _short_packet_jobs(point: _Point) -> MetricJobs:
    sp = point.spec.short_packet_at(point.value)
    return [
        (
            "mtd_short",
            lambda: simulate_short_packet_mtd(
                point.params, point.sim, sp, False, point.workers
            ),
        ),
        (
            "mtd_long",
            lambda: simulate_short_packet_mtd(
                point.params, point.sim, sp, True, point.workers
            ),
        ),
    ]


def _est_jobs(point: _Point) -> MetricJobs:
    jobs: MetricJobs = []
    for scheme, label in ((Scheme.RR, "rr"), (Scheme.BIR, "bir")):
        result = _once(
            lambda scheme=scheme: optimize_est(
                point.block_length,
                point.params.lambda_density,
                point.spec.design_grid,
                scheme,
                delay_backend=point.backend,
                params=point.params,
                config=point.spec.analytic,
                sim=point.sim,
                workers=point.workers,
            )
        )
        jobs += [
            (f"est_{label}", lambda result=result: result().est),
            (f"est_{label}_activity", lambda result=result: result().argmax[0]),
            (f"est_{label}_streams", lambda result=result: result().argmax[1]),
            (f"est_{label}_rate", lambda result=result: result().argmax[2]),
        ]
    return jobs


def _gain_jobs(point: _Point) -> MetricJobs:
    return [
        (
            "throughput_gain",
            lambda: throughput_gain(
                point.block_length,
                point.params.lambda_density,
                point.spec.design_grid,
                delay_backend=point.backend,
                params=point.params,
                config=point.spec.analytic,
                sim=point.sim,
                workers=point.workers,
            ),
        )
    ]


KIND_JOBS: Dict[str, Callable[[_Point], MetricJobs]] = {
    "rcc_vs_T": _rcc_jobs,
    "coverage_vs_T": _coverage_jobs,
    "mtd_bounds_vs_T": _mtd_bounds_jobs,
    "mtd_vs_S": _mtd_jobs,
    "noiseless_check": _mtd_jobs,
    "doppler_sweep": _doppler_jobs,
    "short_packet_sweep": _short_packet_jobs,
    "est_vs_lambda": _est_jobs,
    "gain_vs_lambda": _gain_jobs,
}


def _as_measurement(result: Any) -> Measurement:
    if isinstance(result, DelayEstimate):
        return Measurement(result.value, result.ci_halfwidth)
    if isinstance(result, Measurement):
        return result
    return Measurement(float(result))


def _evaluate_point(point: _Point, seed: int) -> List[ResultRow]:
    spec = point.spec
    rows = []
    for metric, job in KIND_JOBS[spec.kind](point):
        row = ResultRow(
            experiment=spec.name,
            sweep_value=point.value,
            backend=point.backend,
            metric=metric,
            seed=seed if point.backend == MONTE_CARLO else None,
        )
        try:
            measurement = _as_measurement(job())
        except POINT_ERRORS as err:
            logging.getLogger(HARQNET).warning(
                "%s at %s=%s (%s) failed: %s",
                metric,
                spec.sweep.variable if spec.sweep else "",
                point.value,
                point.backend,
                err,
            )
            rows.append(replace(row, error=f"{type(err).__name__}: {err}"))
            continue
        rows.append(
            replace(
                row, value=measurement.value, ci_halfwidth=measurement.ci_halfwidth
            )
        )
    return rows


@dataclass
class ExperimentRun:
    spec: ExperimentSpec
    output_dir: str
    rows: List[ResultRow]
    files: Dict[str, str] = field(default_factory=dict)
    plot_files: List[str] = field(default_factory=list)

    @property
    def failed_rows(self) -> List[ResultRow]:
        return [row for row in self.rows if row.failed]

    @property
    def all_failed(self) -> bool:
        return bool(self.rows) and len(self.failed_rows) == len(self.rows)


def _manifest_spec(spec: ExperimentSpec, seed: int, workers: int) -> ExperimentSpec:
    from harqnet import __version__  # pylint: disable=C0415

    provenance = dict(spec.provenance or {})
    provenance.update(
        harqnet_version=__version__,
        seed=seed,
        workers=workers,
        created=datetime.datetime.now(tz=tzlocal()).isoformat(timespec="seconds"),
    )
    return spec.model_copy(update={"provenance": provenance})


def read_manifest(path: str) -> Tuple[ExperimentSpec, Optional[datetime.datetime]]:
    """The experiment of a manifest and the time its run started."""
    spec = ExperimentSpec.load_file(path)
    created = (spec.provenance or {}).get("created")
    return spec, date_parser.isoparse(created) if created else None


def run_experiment(
    spec: ExperimentSpec,
    output_dir: Optional[str] = None,
    workers: Optional[int] = None,
    progress_callback: Optional[Callable[[int, int], None]] = None,
) -> ExperimentRun:
    """Evaluate every (sweep point, backend) and write the result files.

    Failures of single metrics become rows with an error and never stop the
    run; ExperimentRun.all_failed tells whether anything was computed. The
    seed is resolved once, so every Monte Carlo point uses the same
    realizations.
    """
    assert spec.sweep is not None and spec.backends is not None
    seed = resolve_seed(spec.sim.seed)
    resolved = spec.with_seed(seed)
    output_dir = output_dir if output_dir is not None else resolved.output_dir
    workers = workers or resolved.environment.workers
    makedirs_if_needed(output_dir)
    logger = configure_logger(
        HARQNET, os.path.join(output_dir, LOG_DIR, LOG_FILE), resolved.logging_level
    )
    logger.info(
        "Running %s (%s) over %s with backends %s, seed %d",
        resolved.name,
        resolved.kind,
        resolved.sweep.variable,
        ", ".join(resolved.backends),
        seed,
    )

    points = [
        (value, backend)
        for value in resolved.sweep.typed_values()
        for backend in resolved.backends
    ]
    cache: Dict[str, Any] = {}
    rows: List[ResultRow] = []
    timings = []
    for done, (value, backend) in enumerate(points, start=1):
        point = _Point(
            spec=resolved,
            value=value,
            backend=backend,
            params=resolved.params_at(value),
            sim=resolved.sim,
            workers=workers,
            cache=cache,
        )
        start = time.perf_counter()
        point_rows = _evaluate_point(point, seed)
        elapsed = time.perf_counter() - start
        timings.append(
            {"sweep_value": value, "backend": backend, "wall_time_s": elapsed}
        )
        if resolved.environment.record_timing:
            point_rows = [replace(row, wall_time_s=elapsed) for row in point_rows]
        rows.extend(point_rows)
        logger.debug(
            "%s=%s (%s) done in %.3f s",
            resolved.sweep.variable,
            value,
            backend,
            elapsed,
        )
        if progress_callback is not None:
            progress_callback(done, len(points))

    run = ExperimentRun(spec=resolved, output_dir=output_dir, rows=rows)
    run.files["results"] = os.path.join(output_dir, RESULTS_FILE)
    write_results_csv(rows, run.files["results"])
    run.plot_files = write_plot_data(rows, os.path.join(output_dir, PLOT_DATA_DIR))
    run.files["timing"] = os.path.join(output_dir, TIMING_FILE)
    write_timing_csv(timings, run.files["timing"])
    run.files["manifest"] = os.path.join(output_dir, MANIFEST_FILE)
    _manifest_spec(resolved, seed, workers).dump(run.files["manifest"])

    if run.all_failed:
        logger.error("Every point of %s failed", resolved.name)
    elif run.failed_rows:
        logger.warning(
            "%d of %d results of %s failed",
            len(run.failed_rows),
            len(rows),
            resolved.name,
        )
    return run
