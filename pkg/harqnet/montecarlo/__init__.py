from .doppler import doppler_coefficient, simulate_doppler_mtd
from .estimators import (
    CENSORING_LIMIT,
    CoverageEstimate,
    conditional_success_prob,
    estimate_coverage,
    estimate_coverage_curve,
    estimate_mtd,
    estimate_mtd_trace,
    estimate_rate_moments,
    estimate_rcc,
    run_trials,
    summarize_delays,
)
from .fading import draw_post_sir, draw_rates, draw_sir, zf_gains
from .network import (
    MAX_DISK_RADIUS,
    NetworkRealization,
    edge_radius,
    resolve_seed,
    sample_network,
    trial_rng,
)
from .short_packet import (
    dispersion_coefficient,
    required_rate,
    simulate_short_packet_mtd,
)

__all__ = [
    "CENSORING_LIMIT",
    "CoverageEstimate",
    "MAX_DISK_RADIUS",
    "NetworkRealization",
    "conditional_success_prob",
    "dispersion_coefficient",
    "doppler_coefficient",
    "draw_post_sir",
    "draw_rates",
    "draw_sir",
    "edge_radius",
    "estimate_coverage",
    "estimate_coverage_curve",
    "estimate_mtd",
    "estimate_mtd_trace",
    "estimate_rate_moments",
    "estimate_rcc",
    "required_rate",
    "resolve_seed",
    "run_trials",
    "summarize_delays",
    "sample_network",
    "simulate_doppler_mtd",
    "simulate_short_packet_mtd",
    "trial_rng",
]
