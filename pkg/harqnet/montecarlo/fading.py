"""Fading, activity and post zero-forcing SIR draws for a fixed geometry.

Gains are drawn either from their marginal laws (intended H ~ Gamma(S'),
interfering G ~ Gamma(S), unit scale) or, with gain_model "matrix", from
explicit complex Gaussian channel matrices projected by the zero-forcing
receiver. Both give the same laws.
"""

from typing import Sequence, Tuple

import numpy as np

from harqnet.config import SystemParams

from .network import NetworkRealization

# cap on the number of gain entries drawn at once
_MAX_ENTRIES = 4_000_000


def complex_gaussian(rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
    """CN(0, 1) entries."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def zf_gains(
    serving: np.ndarray, interferers: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Post-processing gains of a zero-forcing receiver.

    serving has shape (..., Nr, S) and interferers (..., N, Nr, S). Returns
    the intended gains 1 / [(H^H H)^-1]_ll of shape (..., S) and the
    interfering gains |u_l^H H_i|^2 summed over the interferer's streams,
    shape (..., S, N), u_l the unit-norm l-th row of the pseudo-inverse.
    """
    hermitian = np.conj(np.swapaxes(serving, -1, -2))
    inverse = np.linalg.inv(hermitian @ serving)
    intended = 1.0 / np.real(np.diagonal(inverse, axis1=-2, axis2=-1))
    filters = inverse @ hermitian
    filters = filters / np.linalg.norm(filters, axis=-1, keepdims=True)
    projected = filters[..., None, :, :] @ interferers
    interfering = np.sum(np.abs(projected) ** 2, axis=-1)
    return intended, np.swapaxes(interfering, -1, -2)


def _gains(
    params: SystemParams,
    count: int,
    rng: np.random.Generator,
    shape: Tuple[int, int],
    gain_model: str,
) -> Tuple[np.ndarray, np.ndarray]:
    streams = params.streams
    if gain_model == "matrix":
        serving = complex_gaussian(rng, shape + (params.rx_antennas, streams))
        interferers = complex_gaussian(
            rng, shape + (count, params.rx_antennas, streams)
        )
        return zf_gains(serving, interferers)
    intended = rng.gamma(params.diversity_order, 1.0, shape + (streams,))
    interfering = rng.gamma(streams, 1.0, shape + (streams, count))
    return intended, interfering


def draw_sir(
    realization: NetworkRealization,
    params: SystemParams,
    rng: np.random.Generator,
    draws: int,
    slot_groups: Sequence[int],
    gain_model: str = "marginal",
) -> np.ndarray:
    """Per-stream SIR of the typical link, shape (draws, slots, S).

    slot_groups[t] names the activity draw slot t uses: slots in one group
    see the same active interferers (one B-IR block), distinct groups
    redraw activity (RR slots, different blocks). Fading is independent
    across slots, streams and draws. A slot without active interferers has
    infinite SIR.
    """
    groups = np.asarray(slot_groups, dtype=int)
    slots = len(groups)
    count = realization.count
    gains = realization.interferer_gains(params.path_loss)
    serving_gain = realization.serving_gain(params)

    per_draw = slots * params.streams * max(count, 1)
    if gain_model == "matrix":
        per_draw *= params.rx_antennas
    chunk = max(1, _MAX_ENTRIES // per_draw)

    sir = np.empty((draws, slots, params.streams))
    for start in range(0, draws, chunk):
        size = min(chunk, draws - start)
        active = rng.random((size, int(groups.max()) + 1, count)) < params.activity
        intended, interfering = _gains(params, count, rng, (size, slots), gain_model)
        weights = active[:, groups, :] * gains
        interference = np.einsum("dtsn,dtn->dts", interfering, weights)
        with np.errstate(divide="ignore"):
            sir[start : start + size] = serving_gain * intended / interference
    return sir


def draw_rates(
    realization: NetworkRealization,
    params: SystemParams,
    rng: np.random.Generator,
    draws: int,
    slot_groups: Sequence[int],
    gain_model: str = "marginal",
) -> np.ndarray:
    """log(1 + SIR) in nat/s/Hz, shape (draws, slots, S)."""
    return np.log1p(draw_sir(realization, params, rng, draws, slot_groups, gain_model))


def draw_post_sir(
    realization: NetworkRealization,
    params: SystemParams,
    rng: np.random.Generator,
) -> np.ndarray:
    """SIR of the S streams in one slot with freshly drawn activity."""
    return draw_sir(realization, params, rng, 1, (0,))[0, 0]
