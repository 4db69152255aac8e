"""Text writers for orbits, diagrams and spread maps.

Floats are written with the shortest decimal that parses back to the same
double (``2.0`` is written ``2``), so every CSV is lossless. Output uses LF
newlines and is byte-for-byte reproducible.
"""
from __future__ import annotations

import contextlib
import math
from pathlib import Path
from typing import IO, Union

import numpy as np

from .bifurcation import DiagramDataset
from .orbits import OrbitSample
from .spread import N_PIXELS, SpreadMapResult

Sink = Union[str, Path, IO[str]]


def fmt(x) -> str:
    x = float(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = repr(x)
    return s[:-2] if s.endswith(".0") else s


@contextlib.contextmanager
def _open(sink: Sink):
    if isinstance(sink, (str, Path)):
        with open(sink, "w", encoding="utf-8", newline="\n") as fh:
            yield fh
    else:
        yield sink


def write_orbit_csv(sample: OrbitSample | np.ndarray, sink: Sink) -> None:
    values = sample.values if isinstance(sample, OrbitSample) else np.asarray(sample)
    if len(values) == 0:
        raise ValueError("empty sample")
    lines = ["n,Y"]
    lines += [f"{n},{fmt(y)}" for n, y in enumerate(values)]
    with _open(sink) as fh:
        fh.write("\n".join(lines) + "\n")


def write_diagram_csv(dataset: DiagramDataset, sink: Sink) -> None:
    if len(dataset) == 0:
        raise ValueError("empty dataset")
    lines = ["C,Y"]
    for c, row, divergent in zip(dataset.c, dataset.values, dataset.divergent):
        cs = fmt(c)
        if divergent:
            lines.append(f"{cs},NaN")
        else:
            lines.extend(f"{cs},{fmt(y)}" for y in row)
    with _open(sink) as fh:
        fh.write("\n".join(lines) + "\n")


def write_spread_csv(result: SpreadMapResult, sink: Sink) -> None:
    """One row per cell, gamma_min-major. Divergent cells get a trailing ``divergent`` field."""
    lines = ["gamma_min,C,occupied,spread_percent"]
    scale = 100.0 / N_PIXELS
    for i, g in enumerate(result.gamma_min_axis):
        gs = fmt(g)
        for j, c in enumerate(result.c_axis):
            occ = int(result.matrix[i, j])
            line = f"{gs},{fmt(c)},{occ},{fmt(occ * scale)}"
            if result.divergent[i, j]:
                line += ",divergent"
            lines.append(line)
    with _open(sink) as fh:
        fh.write("\n".join(lines) + "\n")


def write_spread_pgm(result: SpreadMapResult, sink: Sink) -> None:
    """Plain (P2) grayscale image of the occupied counts, largest gamma_min on top."""
    height, width = result.matrix.shape
    lines = ["P2", f"{width} {height}", str(N_PIXELS)]
    for row in result.matrix[::-1]:
        lines.append(" ".join(str(int(v)) for v in row))
    with _open(sink) as fh:
        fh.write("\n".join(lines) + "\n")
