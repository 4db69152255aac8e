"""Command-line front end.

    tanhmap growth     --c 3.5 --out growth.csv
    tanhmap orbit      --gamma-min 0.02 --c 3.5 --out orbit.csv
    tanhmap bifurcate  --gamma-min 0.018 --out diagram.csv
    tanhmap onsets     --growth linear
    tanhmap spread     --format pgm --out spread.pgm

Exit codes: 0 ok, 2 bad arguments, 3 a single-orbit command diverged.
"""
from __future__ import annotations

import argparse
import contextlib
import sys

import numpy as np

from . import emit
from .bifurcation import CSweepSpec, classify_sweep, find_onsets, sweep_c
from .core import DivergenceError, GrowthRange, Linear, MapParams, Tanh, growth_rate, shape_value, step
from .orbits import OrbitSpec, PeriodDetectorConfig, detect_period, lyapunov, sample_orbit
from .spread import spread_sweep

EXIT_USAGE = 2
EXIT_DIVERGED = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p: argparse.ArgumentParser, samples: int = 50):
    p.add_argument("--growth", choices=("linear", "tanh"), default="tanh")
    p.add_argument("--a-y", type=float, default=5.0, help="tanh steepness")
    p.add_argument("--gamma-min", type=float, default=0.0)
    p.add_argument("--gamma-max", type=float, default=1.0)
    p.add_argument("--y0", type=float, default=0.5)
    p.add_argument("--transient", type=int, default=1000)
    p.add_argument("--samples", type=int, default=samples)
    p.add_argument("--out", help="output file (default: standard output)")


def _c_grid(p: argparse.ArgumentParser):
    p.add_argument("--c-min", type=float, default=1.0)
    p.add_argument("--c-max", type=float, default=4.0)
    p.add_argument("--c-steps", type=int, default=601)
    p.add_argument("--workers", type=int, default=1, help="threads for the sweep")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tanhmap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("growth", help="growth rate and return map on 1001 points of [0, 1]")
    _common(p)
    p.add_argument("--c", type=float, required=True)

    p = sub.add_parser("orbit", help="post-transient orbit plus classification summary")
    _common(p)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--lyap-iters", type=int, default=100_000)

    p = sub.add_parser("bifurcate", help="bifurcation diagram CSV")
    _common(p)
    _c_grid(p)

    p = sub.add_parser("onsets", help="period-doubling and chaos onsets")
    _common(p)
    _c_grid(p)
    p.add_argument("--lyap-iters", type=int, default=100_000)

    p = sub.add_parser("spread", help="pixel spread over a (gamma_min, C) grid")
    _common(p, samples=500)
    _c_grid(p)
    p.add_argument("--gmin-min", type=float, default=0.0)
    p.add_argument("--gmin-max", type=float, default=0.2)
    p.add_argument("--gmin-steps", type=int, default=201)
    p.add_argument("--format", choices=("csv", "pgm"), default="csv")
    return parser


def _shape(args):
    return Tanh(args.a_y) if args.growth == "tanh" else Linear()


def _spec(args) -> OrbitSpec:
    return OrbitSpec(args.y0, args.transient, args.samples)


def _sweep(args) -> CSweepSpec:
    if args.workers < 1:
        raise ValueError("--workers must be >= 1")
    return CSweepSpec(args.c_min, args.c_max, args.c_steps)


@contextlib.contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _summary(**fields) -> str:
    return " ".join(f"{k}={v}" for k, v in fields.items())


def _run_growth(args):
    shape, bounds = _shape(args), GrowthRange(args.gamma_min, args.gamma_max)
    params = MapParams(shape, bounds, args.c)
    y = np.arange(1001) / 1000
    f, g, nxt = shape_value(shape, y), growth_rate(shape, bounds, y), step(params, y)
    lines = ["Y,f,gamma,Y_next"]
    lines += [",".join(emit.fmt(v) for v in row) for row in zip(y, f, g, nxt)]
    with _sink(args.out) as fh:
        fh.write("\n".join(lines) + "\n")


def _run_orbit(args):
    params = MapParams(_shape(args), GrowthRange(args.gamma_min, args.gamma_max), args.c)
    spec = _spec(args)
    if args.lyap_iters < 1:
        raise ValueError("--lyap-iters must be >= 1")
    sample = sample_orbit(params, spec)
    cls = detect_period(params, spec, PeriodDetectorConfig())
    lam = lyapunov(params, spec.y0, spec.transient_len, args.lyap_iters)
    if args.out is not None:
        emit.write_orbit_csv(sample, args.out)
    period = cls.period if cls.period is not None else "none"
    print(_summary(**{"class": cls.kind.value, "period": period, "lyapunov": emit.fmt(lam)}))


def _run_bifurcate(args):
    bounds = GrowthRange(args.gamma_min, args.gamma_max)
    data = sweep_c(_shape(args), bounds, _sweep(args), _spec(args), workers=args.workers)
    with _sink(args.out) as fh:
        emit.write_diagram_csv(data, fh)


def _run_onsets(args):
    bounds = GrowthRange(args.gamma_min, args.gamma_max)
    points = classify_sweep(
        _shape(args), bounds, _sweep(args), _spec(args),
        lyapunov_n=args.lyap_iters, workers=args.workers,
    )
    rep = find_onsets(points)
    show = lambda v: "none" if v is None else emit.fmt(v)  # noqa: E731
    print(_summary(period_doubling_c=show(rep.period_doubling_c), chaos_c=show(rep.chaos_c)))


def _run_spread(args):
    if args.gmin_steps < 1:
        raise ValueError("--gmin-steps must be >= 1")
    if args.gmin_steps == 1:
        g_axis = np.array([args.gmin_min])
    else:
        g_axis = args.gmin_min + np.arange(args.gmin_steps) * (args.gmin_max - args.gmin_min) / (
            args.gmin_steps - 1
        )
    result = spread_sweep(
        _shape(args), args.gamma_max, g_axis, _sweep(args).grid(), _spec(args), args.workers
    )
    writer = emit.write_spread_pgm if args.format == "pgm" else emit.write_spread_csv
    with _sink(args.out) as fh:
        writer(result, fh)


_COMMANDS = {
    "growth": _run_growth,
    "orbit": _run_orbit,
    "bifurcate": _run_bifurcate,
    "onsets": _run_onsets,
    "spread": _run_spread,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _COMMANDS[args.command](args)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"tanhmap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DivergenceError as exc:
        print(f"tanhmap: {exc}", file=sys.stderr)
        return EXIT_DIVERGED
    except OSError as exc:
        print(f"tanhmap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
