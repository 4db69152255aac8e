"""Pixel-occupancy spread of post-transient orbits.

[0, 1] is cut into 100 equal pixels; the spread of an orbit is the number
of pixels its samples land in (equivalently a percentage, since there are
100 pixels). A fixed point fills a single pixel, a chaotic band many.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._parallel import chunked
from .core import GrowthRange, GrowthShape, iterate_many
from .orbits import OrbitSample, OrbitSpec

N_PIXELS = 100

#: Default protocol for spread maps; 500 samples let chaotic bands fill their pixels.
SPREAD_SPEC = OrbitSpec(sample_len=500)


def bin_indices(y) -> np.ndarray:
    """Vectorized :func:`bin_index`; -1 marks values outside [0, 1]."""
    y = np.asarray(y, dtype=float)
    inside = (y >= 0.0) & (y <= 1.0)
    idx = np.full(y.shape, -1, dtype=np.intp)
    idx[inside] = np.minimum(np.floor(y[inside] * N_PIXELS), N_PIXELS - 1)
    return idx


def bin_index(y: float) -> int | None:
    """Pixel holding ``y``: ``floor(100*y)``, with 1.0 in the top pixel.

    Values outside [0, 1] fall off the grid and give None.
    """
    k = int(bin_indices(y))
    return None if k < 0 else k


@dataclass(frozen=True)
class SpreadGrid:
    counts: np.ndarray = field(default_factory=lambda: np.zeros(N_PIXELS, dtype=np.int64))

    @property
    def occupied(self) -> int:
        return int(np.count_nonzero(self.counts))

    @property
    def spread_percent(self) -> float:
        return self.occupied * (100.0 / N_PIXELS)


def spread_of_sample(sample: OrbitSample | np.ndarray) -> SpreadGrid:
    values = sample.values if isinstance(sample, OrbitSample) else np.asarray(sample, dtype=float)
    if values.size == 0:
        raise ValueError("empty sample")
    idx = bin_indices(values)
    counts = np.bincount(idx[idx >= 0], minlength=N_PIXELS)
    return SpreadGrid(counts)


@dataclass(frozen=True)
class SpreadMapResult:
    """Occupied-pixel counts on a (gamma_min, C) grid.

    ``matrix[i, j]`` belongs to ``gamma_min_axis[i]`` and ``c_axis[j]``;
    ``counts[i, j]`` holds the per-pixel sample counts behind it.
    """

    gamma_min_axis: np.ndarray
    c_axis: np.ndarray
    matrix: np.ndarray
    divergent: np.ndarray
    counts: np.ndarray
    spec: OrbitSpec
    shape: GrowthShape | None = None
    gamma_max: float = 1.0

    def __post_init__(self):
        dims = (len(self.gamma_min_axis), len(self.c_axis))
        if self.matrix.shape != dims or self.divergent.shape != dims:
            raise ValueError(f"matrix must be {dims}")
        if self.matrix.size and not (0 <= self.matrix.min() and self.matrix.max() <= N_PIXELS):
            raise ValueError("occupied counts must lie in [0, 100]")


def default_gamma_min_axis() -> np.ndarray:
    return np.arange(201) * 0.2 / 200


def _check_axis(axis, name) -> np.ndarray:
    axis = np.asarray(axis, dtype=float).ravel()
    if axis.size == 0:
        raise ValueError(f"{name} is empty")
    if np.any(np.diff(axis) <= 0):
        raise ValueError(f"{name} must be strictly ascending")
    return axis


def spread_sweep(
    shape: GrowthShape,
    gamma_max: float,
    gamma_min_axis,
    c_axis,
    spec: OrbitSpec = SPREAD_SPEC,
    workers: int = 1,
) -> SpreadMapResult:
    """Spread of every (gamma_min, C) cell under a shared orbit protocol.

    Divergent cells report 0 occupied pixels and are flagged.
    """
    g_axis = _check_axis(gamma_min_axis, "gamma_min_axis")
    c_axis = _check_axis(c_axis, "c_axis")
    for g in (g_axis[0], g_axis[-1]):
        GrowthRange(float(g), gamma_max)
    if np.any(c_axis <= 0) or not np.all(np.isfinite(c_axis)):
        raise ValueError("c values must be finite and > 0")
    G, C = np.meshgrid(g_axis, c_axis, indexing="ij")
    G, C = G.ravel(), C.ravel()

    def block(lo, hi):
        values, divergent = iterate_many(
            shape, G[lo:hi], gamma_max, C[lo:hi], spec.y0, spec.transient_len, spec.sample_len
        )
        counts = np.zeros((hi - lo, N_PIXELS), dtype=np.int32)
        flat = counts.ravel()
        base = np.arange(hi - lo) * N_PIXELS
        for j in range(spec.sample_len):
            idx = bin_indices(values[:, j])
            ok = idx >= 0
            # one sample per cell per column, so the flat indices are unique
            flat[base[ok] + idx[ok]] += 1
        return counts, divergent

    counts, divergent = chunked(block, G.size, workers)
    dims = (len(g_axis), len(c_axis))
    counts = counts.reshape(*dims, N_PIXELS)
    matrix = np.count_nonzero(counts, axis=2)
    divergent = divergent.reshape(dims)
    matrix[divergent] = 0
    return SpreadMapResult(g_axis, c_axis, matrix, divergent, counts, spec, shape, gamma_max)
