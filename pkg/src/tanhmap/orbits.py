"""Transient protocol, attractor classification and Lyapunov exponents."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .core import (
    DIVERGENCE_LIMIT,
    DivergenceError,
    MapParams,
    _map,
    _slope,
    iterate,
    scalar_step,
)


@dataclass(frozen=True)
class OrbitSpec:
    """Iteration protocol: ``transient_len`` discarded steps, then ``sample_len`` kept values."""

    y0: float = 0.5
    transient_len: int = 1000
    sample_len: int = 50

    def __post_init__(self):
        if not 0.0 < self.y0 < 1.0:
            raise ValueError(f"y0 must lie strictly inside (0, 1), got {self.y0!r}")
        if self.transient_len < 0:
            raise ValueError("transient_len must be >= 0")
        if self.sample_len < 1:
            raise ValueError("sample_len must be >= 1")


@dataclass(frozen=True)
class OrbitSample:
    values: np.ndarray
    params: MapParams
    spec: OrbitSpec = field(default_factory=OrbitSpec)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.spec.sample_len,):
            raise ValueError(
                f"expected {self.spec.sample_len} values, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("orbit sample contains non-finite values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PeriodDetectorConfig:
    eps_abs: float = 1e-9
    eps_rel: float = 1e-9
    p_max: int = 64
    confirm_cycles: int = 3

    def __post_init__(self):
        if not (self.eps_abs > 0 and self.eps_rel > 0):
            raise ValueError("tolerances must be > 0")
        if self.p_max < 1 or self.confirm_cycles < 1:
            raise ValueError("p_max and confirm_cycles must be >= 1")

    @property
    def window(self) -> int:
        """Number of consecutive iterates needed to test every p <= p_max."""
        return (self.confirm_cycles + 1) * self.p_max


class Kind(enum.Enum):
    FIXED_POINT = "fixed_point"
    PERIODIC = "periodic"
    APERIODIC = "aperiodic"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class AttractorClass:
    """Long-term behaviour. ``period`` is 1 for a fixed point, the minimal
    cycle length for periodic orbits, and None otherwise."""

    kind: Kind
    period: int | None = None

    @classmethod
    def from_period(cls, p: int) -> AttractorClass:
        if p == 1:
            return cls(Kind.FIXED_POINT, 1)
        if p >= 2:
            return cls(Kind.PERIODIC, p)
        return cls(Kind.APERIODIC)

    @property
    def is_periodic(self) -> bool:
        return self.kind is Kind.PERIODIC

    def __str__(self) -> str:
        if self.kind is Kind.PERIODIC:
            return f"Periodic{{{self.period}}}"
        return {
            Kind.FIXED_POINT: "FixedPoint",
            Kind.APERIODIC: "Aperiodic",
            Kind.DIVERGENT: "Divergent",
        }[self.kind]


FIXED_POINT = AttractorClass(Kind.FIXED_POINT, 1)
APERIODIC = AttractorClass(Kind.APERIODIC)
DIVERGENT = AttractorClass(Kind.DIVERGENT)


def sample_orbit(params: MapParams, spec: OrbitSpec = OrbitSpec()) -> OrbitSample:
    """Discard ``spec.transient_len`` iterates and keep the next ``spec.sample_len``.

    The kept window starts at the state reached after the transient, so
    with ``transient_len=0`` the sample begins with ``y0`` itself.
    """
    trace = iterate(params, spec.y0, spec.transient_len + spec.sample_len - 1)
    return OrbitSample(trace[spec.transient_len:], params, spec)


def _passes(window: np.ndarray, p: int, cfg: PeriodDetectorConfig) -> np.ndarray:
    n = cfg.confirm_cycles * p
    head = window[:, :n]
    return np.all(
        np.abs(window[:, p : p + n] - head) <= cfg.eps_abs + cfg.eps_rel * np.abs(head),
        axis=1,
    )


def periods_of_windows(windows: np.ndarray, cfg: PeriodDetectorConfig) -> np.ndarray:
    """Minimal period per row of ``windows`` (shape (k, >= cfg.window)); 0 = none.

    A candidate p is accepted only if no proper divisor of p passes too.
    """
    windows = np.atleast_2d(windows)
    if windows.shape[1] < cfg.window:
        raise ValueError(f"need at least {cfg.window} iterates per row")
    found = np.zeros(len(windows), dtype=int)
    passed = {}
    for p in range(1, cfg.p_max + 1):
        passed[p] = _passes(windows, p, cfg)
        new = passed[p] & (found == 0)
        for d in range(1, p):
            if p % d == 0:
                new &= ~passed[d]
        found[new] = p
    return found


def detect_period(
    params: MapParams,
    spec: OrbitSpec = OrbitSpec(),
    cfg: PeriodDetectorConfig = PeriodDetectorConfig(),
) -> AttractorClass:
    """Classify the post-transient orbit.

    The test window starts at the first plotted sample and is extended past
    ``spec.sample_len`` whenever the confirmation cycles need more iterates.
    """
    length = max(cfg.window, spec.sample_len)
    try:
        trace = iterate(params, spec.y0, spec.transient_len + length - 1)
    except DivergenceError:
        return DIVERGENT
    p = int(periods_of_windows(trace[spec.transient_len:], cfg)[0])
    return AttractorClass.from_period(p)


def lyapunov(
    params: MapParams, y0: float = 0.5, transient: int = 1000, n: int = 100_000
) -> float:
    """Mean of ``ln|F'(y_k)|`` over ``n`` post-transient iterates.

    Returns ``-inf`` when the orbit hits a point of zero slope (superstable).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    f = scalar_step(params)
    y = float(y0)
    for k in range(1, transient + 1):
        y = f(y)
        if not abs(y) <= DIVERGENCE_LIMIT:
            raise DivergenceError(k, y)
    b = params.bounds
    shape, lo, hi, c = params.shape, b.gamma_min, b.gamma_max, params.c
    log = np.log
    total = 0.0
    for k in range(transient + 1, transient + n + 1):
        d = abs(float(_slope(shape, lo, hi, c, y)))
        if d == 0.0:
            return -math.inf
        total += float(log(d))
        y = f(y)
        if not abs(y) <= DIVERGENCE_LIMIT:
            raise DivergenceError(k, y)
    return total / n


def lyapunov_many(shape, gamma_min, gamma_max, c, y0: float, transient: int, n: int):
    """Vectorized :func:`lyapunov`; divergent rows give NaN."""
    gamma_min, gamma_max, c = (
        v.ravel()
        for v in np.broadcast_arrays(
            *(np.asarray(v, dtype=float) for v in (gamma_min, gamma_max, c))
        )
    )
    y = np.full(c.shape, float(y0))
    diverged = np.zeros(c.shape, dtype=bool)

    def advance(y):
        y = _map(shape, gamma_min, gamma_max, c, y)
        bad = ~(np.abs(y) <= DIVERGENCE_LIMIT)
        if bad.any():
            diverged[bad] = True
            y[bad] = 0.0
        return y

    for _ in range(transient):
        y = advance(y)
    total = np.zeros(c.shape)
    with np.errstate(divide="ignore"):
        for _ in range(n):
            total += np.log(np.abs(_slope(shape, gamma_min, gamma_max, c, y)))
            y = advance(y)
    out = total / n
    out[diverged] = np.nan
    return out


def orbit_extremes(sample: OrbitSample) -> tuple[float, float]:
    values = sample.values
    if len(values) == 0:
        raise ValueError("empty sample")
    return float(values.min()), float(values.max())


__all__ = [
    "APERIODIC",
    "DIVERGENT",
    "FIXED_POINT",
    "AttractorClass",
    "Kind",
    "OrbitSample",
    "OrbitSpec",
    "PeriodDetectorConfig",
    "detect_period",
    "lyapunov",
    "lyapunov_many",
    "orbit_extremes",
    "periods_of_windows",
    "sample_orbit",
]
