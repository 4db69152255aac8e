"""Recurrence relation with a linear or hyperbolic-tangent growth rate.

The map is

    Y_{n+1} = C * gamma(Y_n) * Y_n,
    gamma(Y) = gamma_min + f(Y) * (gamma_max - gamma_min),

where f is either the logistic weight ``1 - Y`` or the smooth step
``0.5 * (1 - tanh(A_Y * (Y - 0.5)))``.

Every function here accepts plain floats or numpy arrays. The scalar and
array code paths evaluate the same operations in the same order, so a
single orbit and a row of a vectorized sweep are bit-identical.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

#: |Y| above this aborts an orbit.
DIVERGENCE_LIMIT = 1e12


class DivergenceError(ArithmeticError):
    """Orbit left the region ``|Y| <= DIVERGENCE_LIMIT``."""

    def __init__(self, step: int, value: float):
        super().__init__(f"orbit diverged at step {step} (Y={value!r})")
        self.step = step
        self.value = value


@dataclass(frozen=True)
class Linear:
    """Logistic weight ``f(Y) = 1 - Y``."""

    def __str__(self) -> str:
        return "linear"


@dataclass(frozen=True)
class Tanh:
    """Smooth step ``f(Y) = 0.5 * (1 - tanh(a_y * (Y - 0.5)))``."""

    a_y: float = 5.0

    def __post_init__(self):
        if not (math.isfinite(self.a_y) and self.a_y > 0):
            raise ValueError(f"a_y must be finite and > 0, got {self.a_y!r}")

    def __str__(self) -> str:
        return f"tanh(a_y={self.a_y!r})"


GrowthShape = Union[Linear, Tanh]


@dataclass(frozen=True)
class GrowthRange:
    """Bounds of the growth rate, ``0 <= gamma_min < gamma_max <= 1``."""

    gamma_min: float = 0.0
    gamma_max: float = 1.0

    def __post_init__(self):
        lo, hi = self.gamma_min, self.gamma_max
        if not (0.0 <= lo < hi <= 1.0):
            raise ValueError(
                f"need 0 <= gamma_min < gamma_max <= 1, got [{lo!r}, {hi!r}]"
            )


@dataclass(frozen=True)
class MapParams:
    shape: GrowthShape
    bounds: GrowthRange
    c: float

    def __post_init__(self):
        if not isinstance(self.shape, (Linear, Tanh)):
            raise TypeError(f"unknown growth shape {self.shape!r}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ValueError(f"c must be finite and > 0, got {self.c!r}")


def shape_value(shape: GrowthShape, y):
    """Normalized shape f(y); in (0, 1) for Tanh, unbounded for Linear."""
    if isinstance(shape, Tanh):
        return 0.5 * (1.0 - np.tanh(shape.a_y * (y - 0.5)))
    return 1.0 - y


def _rate(shape, gamma_min, gamma_max, y):
    return gamma_min + shape_value(shape, y) * (gamma_max - gamma_min)


def _map(shape, gamma_min, gamma_max, c, y):
    return c * _rate(shape, gamma_min, gamma_max, y) * y


def _slope(shape, gamma_min, gamma_max, c, y):
    span = gamma_max - gamma_min
    if isinstance(shape, Tanh):
        t = np.tanh(shape.a_y * (y - 0.5))
        rate = gamma_min + 0.5 * (1.0 - t) * span
        return c * (rate - y * 0.5 * shape.a_y * span * (1.0 - t * t))
    return c * (gamma_min + (1.0 - y) * span) - c * y * span


def growth_rate(shape: GrowthShape, bounds: GrowthRange, y):
    return _rate(shape, bounds.gamma_min, bounds.gamma_max, y)


def step(params: MapParams, y):
    """One application of the map, evaluated as ``c * gamma(y) * y``."""
    b = params.bounds
    return _map(params.shape, b.gamma_min, b.gamma_max, params.c, y)


def step_derivative(params: MapParams, y):
    """Analytic dF/dy of :func:`step`."""
    b = params.bounds
    return _slope(params.shape, b.gamma_min, b.gamma_max, params.c, y)


def scalar_step(params: MapParams) -> Callable[[float], float]:
    """Return a fast float -> float version of :func:`step`.

    Same operation order as the array path; only the numpy scalar boxing
    is stripped.
    """
    lo, hi, c = params.bounds.gamma_min, params.bounds.gamma_max, params.c
    span = hi - lo
    if isinstance(params.shape, Tanh):
        a = params.shape.a_y
        tanh = np.tanh

        def f(y: float) -> float:
            return c * (lo + 0.5 * (1.0 - float(tanh(a * (y - 0.5)))) * span) * y
    else:

        def f(y: float) -> float:
            return c * (lo + (1.0 - y) * span) * y

    return f


def iterate(params: MapParams, y0: float, n: int) -> np.ndarray:
    """Orbit ``[y0, F(y0), ..., F^n(y0)]`` as a float64 array of length n+1.

    Raises DivergenceError as soon as an iterate leaves ``|Y| <= 1e12``.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    f = scalar_step(params)
    trace = np.empty(n + 1)
    y = float(y0)
    trace[0] = y
    for k in range(1, n + 1):
        y = f(y)
        if not abs(y) <= DIVERGENCE_LIMIT:
            raise DivergenceError(k, y)
        trace[k] = y
    return trace


def iterate_many(shape, gamma_min, gamma_max, c, y0: float, skip: int, keep: int):
    """Vectorized orbits for arrays of (gamma_min, gamma_max, c).

    Runs ``skip`` steps, then records ``keep`` consecutive iterates starting
    with the state reached after ``skip`` steps. Returns ``(values, diverged)``
    with ``values`` of shape (k, keep); diverged rows are all-NaN.
    """
    gamma_min, gamma_max, c = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (gamma_min, gamma_max, c))
    )
    gamma_min, gamma_max, c = (v.ravel() for v in (gamma_min, gamma_max, c))
    y = np.full(c.shape, float(y0))
    diverged = np.zeros(c.shape, dtype=bool)
    values = np.empty((c.size, keep))
    for k in range(skip + keep):
        if k >= skip:
            values[:, k - skip] = y
        if k == skip + keep - 1:
            break
        y = _map(shape, gamma_min, gamma_max, c, y)
        bad = ~(np.abs(y) <= DIVERGENCE_LIMIT)
        if bad.any():
            diverged |= bad
            y[bad] = 0.0
    values[diverged] = np.nan
    return values, diverged
