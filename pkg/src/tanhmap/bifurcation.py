"""Sweeps over the bifurcation constant C.

Diagram data, per-C attractor classification, onset detection and the
check of the orbit maximum against the ``0.3 * gamma_max * C`` line.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from ._parallel import chunked
from .core import GrowthRange, GrowthShape, MapParams, iterate_many
from .orbits import (
    DIVERGENT,
    AttractorClass,
    Kind,
    OrbitSample,
    OrbitSpec,
    PeriodDetectorConfig,
    lyapunov_many,
    periods_of_windows,
)

#: Prefactor of the empirical orbit-maximum line ``0.3 * gamma_max * C``.
ENVELOPE_SLOPE = 0.3


@dataclass(frozen=True)
class CSweepSpec:
    c_min: float = 1.0
    c_max: float = 4.0
    c_steps: int = 601

    def __post_init__(self):
        if not (0 < self.c_min < self.c_max and math.isfinite(self.c_max)):
            raise ValueError(f"need 0 < c_min < c_max, got {self.c_min!r}, {self.c_max!r}")
        if self.c_steps < 2:
            raise ValueError("c_steps must be >= 2")

    def grid(self) -> np.ndarray:
        """Uniform grid with both endpoints, point i = c_min + i*(c_max-c_min)/(c_steps-1)."""
        i = np.arange(self.c_steps, dtype=float)
        return self.c_min + i * (self.c_max - self.c_min) / (self.c_steps - 1)

    @property
    def step(self) -> float:
        return (self.c_max - self.c_min) / (self.c_steps - 1)


@dataclass(frozen=True)
class DiagramDataset:
    """Post-transient samples for every C of a sweep.

    ``values`` has shape (len(c), spec.sample_len); divergent rows are NaN
    and flagged in ``divergent``.
    """

    shape: GrowthShape
    bounds: GrowthRange
    spec: OrbitSpec
    c: np.ndarray
    values: np.ndarray
    divergent: np.ndarray

    def __post_init__(self):
        if len(self.c) and not np.all(np.diff(self.c) > 0):
            raise ValueError("c must be strictly ascending")
        if self.values.shape != (len(self.c), self.spec.sample_len):
            raise ValueError("values shape does not match c grid and sample_len")

    def __len__(self) -> int:
        return len(self.c)

    def sample(self, i: int) -> OrbitSample | None:
        """Row ``i`` as an OrbitSample, or None if it diverged."""
        if self.divergent[i]:
            return None
        params = MapParams(self.shape, self.bounds, float(self.c[i]))
        return OrbitSample(self.values[i], params, self.spec)

    @property
    def rows(self):
        return [(float(c), self.sample(i)) for i, c in enumerate(self.c)]


class Classified(NamedTuple):
    c: float
    attractor: AttractorClass
    lyapunov: float


@dataclass(frozen=True)
class OnsetReport:
    period_doubling_c: float | None
    chaos_c: float | None
    grid_resolution: float


def sweep_c(
    shape: GrowthShape,
    bounds: GrowthRange,
    sweep: CSweepSpec = CSweepSpec(),
    spec: OrbitSpec = OrbitSpec(),
    workers: int = 1,
) -> DiagramDataset:
    """Bifurcation-diagram data over the C grid of ``sweep``."""
    return _sweep_grid(shape, bounds, sweep.grid(), spec, workers)


def _sweep_grid(shape, bounds, c, spec, workers=1) -> DiagramDataset:
    c = np.asarray(c, dtype=float)

    def block(lo, hi):
        return iterate_many(
            shape, bounds.gamma_min, bounds.gamma_max, c[lo:hi],
            spec.y0, spec.transient_len, spec.sample_len,
        )

    values, divergent = chunked(block, len(c), workers)
    return DiagramDataset(shape, bounds, spec, c, values, divergent)


def classify_grid(
    shape: GrowthShape,
    bounds: GrowthRange,
    c: Sequence[float],
    spec: OrbitSpec = OrbitSpec(),
    cfg: PeriodDetectorConfig = PeriodDetectorConfig(),
    lyapunov_n: int = 100_000,
    workers: int = 1,
) -> list[Classified]:
    """:func:`classify_sweep` on an explicit list of C values."""
    c = np.asarray(c, dtype=float)
    length = max(cfg.window, spec.sample_len)

    def block(lo, hi):
        windows, divergent = iterate_many(
            shape, bounds.gamma_min, bounds.gamma_max, c[lo:hi],
            spec.y0, spec.transient_len, length,
        )
        periods = periods_of_windows(windows, cfg)
        lyap = lyapunov_many(
            shape, bounds.gamma_min, bounds.gamma_max, c[lo:hi],
            spec.y0, spec.transient_len, lyapunov_n,
        )
        return periods, divergent, lyap

    periods, divergent, lyap = chunked(block, len(c), workers)
    out = []
    for ci, p, dv, lam in zip(c, periods, divergent, lyap):
        cls = DIVERGENT if dv else AttractorClass.from_period(int(p))
        out.append(Classified(float(ci), cls, float(lam)))
    return out


def classify_sweep(
    shape: GrowthShape,
    bounds: GrowthRange,
    sweep: CSweepSpec = CSweepSpec(),
    spec: OrbitSpec = OrbitSpec(),
    cfg: PeriodDetectorConfig = PeriodDetectorConfig(),
    lyapunov_n: int = 100_000,
    workers: int = 1,
) -> list[Classified]:
    """Attractor class and Lyapunov exponent at every grid C, ascending.

    Rows match :func:`~tanhmap.orbits.detect_period` and
    :func:`~tanhmap.orbits.lyapunov` bit for bit.
    """
    return classify_grid(shape, bounds, sweep.grid(), spec, cfg, lyapunov_n, workers)


def _chaotic(point: Classified) -> bool:
    return point.attractor.kind is Kind.APERIODIC and point.lyapunov > 0


def find_onsets(classified: Sequence[Classified]) -> OnsetReport:
    """First grid C at which period doubling and chaos set in.

    Each onset must hold at that point and at the next grid point, which
    suppresses isolated misclassifications.
    """
    if not classified:
        raise ValueError("empty classification")
    cs = [p.c for p in classified]
    if any(b <= a for a, b in zip(cs, cs[1:])):
        raise ValueError("classification must be sorted by ascending c")
    doubling = chaos = None
    for here, nxt in zip(classified, classified[1:]):
        if doubling is None and here.attractor.is_periodic and nxt.attractor.is_periodic:
            doubling = here.c
        if chaos is None and _chaotic(here) and _chaotic(nxt):
            chaos = here.c
    resolution = cs[1] - cs[0] if len(cs) > 1 else 0.0
    return OnsetReport(doubling, chaos, resolution)


def envelope_check(dataset: DiagramDataset, gamma_max: float) -> list[tuple[float, float, float]]:
    """Per row ``(c, max_y, max_y / (0.3 * gamma_max * c))``; NaN for divergent rows."""
    if len(dataset) == 0:
        raise ValueError("empty dataset")
    out = []
    for c, row, dv in zip(dataset.c, dataset.values, dataset.divergent):
        top = math.nan if dv else float(row.max())
        out.append((float(c), top, top / (ENVELOPE_SLOPE * gamma_max * float(c))))
    return out
