"""Command-line interface: ``geodesic-ivp {solve,trace,bench,convergence}``.

Exit codes: 0 success, 2 usage error, 3 solver error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings
from typing import Optional, Sequence

from .errors import GeodesicError, SafeDomainWarning, TestsetParseError
from .solver import (
    SYSTEMS,
    DirectProblem,
    convergence_study,
    select_steps,
    solve_direct,
    trace_direct,
)
from .spheroid import WGS84, Ellipsoid
from .testset import (
    PUBLISHED_GROUP_SIZE,
    classify_group,
    in_geodetic_subset,
    read_testset,
    run_bench,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SOLVER = 3
EXIT_IO = 4

DEG = "{:.12f}"
M = "{:.9f}"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _sci(v: Optional[float]) -> str:
    return "-" if v is None else f"{v:.3e}"


def _add_ellipsoid(p):
    p.add_argument("--a", type=float, default=WGS84.a, help="major semiaxis in metres (default WGS84)")
    p.add_argument(
        "--f", type=float, default=WGS84.f, help="flattening (default WGS84); 0 gives a sphere"
    )
    p.add_argument("--system", choices=SYSTEMS, default="cartesian")


def _add_geodesic(p):
    p.add_argument("--lat0", type=float, required=True, help="start latitude (deg)")
    p.add_argument("--lon0", type=float, required=True, help="start longitude (deg)")
    p.add_argument("--azi0", type=float, required=True, help="start azimuth (deg, clockwise from north)")
    p.add_argument("--s", type=float, required=True, help="arc length (m)")
    _add_ellipsoid(p)


def _add_steps(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--steps", type=int, help="number of RK4 steps")
    g.add_argument("--target-ds", type=float, help="largest step length in metres (default 10 km)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="geodesic-ivp", description="Geodesics on an oblate spheroid by RK4.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve one direct problem")
    _add_geodesic(p)
    _add_steps(p)
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("trace", help="sample points along one geodesic")
    _add_geodesic(p)
    _add_steps(p)
    p.add_argument("--every", type=int, default=1, help="keep every k-th step (default 1)")
    p.add_argument("--format", choices=("csv", "geojson", "table"), default="csv")
    p.add_argument("-o", "--output")

    p = sub.add_parser("bench", help="evaluate a reference test set")
    p.add_argument("--testset", required=True, help="GeodTest-format file (.gz accepted)")
    p.add_argument(
        "--steps", type=int, action="append", help="step count; repeat for a sweep (default 1000)"
    )
    _add_ellipsoid(p)
    p.add_argument("--limit", type=int, help="read at most this many records")
    p.add_argument("--every", type=int, default=1, help="keep every k-th line of the file")
    p.add_argument("--group", type=int, action="append", choices=range(1, 10), metavar="{1..9}",
                   help="only these groups (repeatable)")
    p.add_argument("--group-size", type=int, default=PUBLISHED_GROUP_SIZE,
                   help=f"records per group; group 1 has twice as many (default {PUBLISHED_GROUP_SIZE})")
    p.add_argument("--subset", action="store_true",
                   help="only records clear of poles and meridians (the geodetic-system subset)")
    par = p.add_mutually_exclusive_group()
    par.add_argument("--serial", action="store_true", help="evaluate records in one thread")
    par.add_argument("--workers", type=int, help="worker threads (default: CPU count)")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("-o", "--output")

    p = sub.add_parser("convergence", help="observed order of accuracy for one geodesic")
    _add_geodesic(p)
    p.add_argument("--n-list", type=int, nargs="+", required=True,
                   help="step counts; the largest is the reference")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("-o", "--output")
    return parser


def _ellipsoid(args) -> Ellipsoid:
    try:
        return Ellipsoid(args.a, args.f)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _problem(args, n=None) -> DirectProblem:
    if n is None and getattr(args, "steps", None) is not None:
        n = args.steps
    if n is None and getattr(args, "target_ds", None) is not None:
        if not args.target_ds > 0 or not math.isfinite(args.s) or args.s < 0:
            raise _UsageError("--target-ds must be positive")
        n = select_steps(args.s, args.target_ds)
    try:
        return DirectProblem((args.lat0, args.lon0), args.azi0, args.s, args.system, n)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(header, rows) -> str:
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
              for i, h in enumerate(header)]
    lines = ["  ".join(str(h).rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(str(v).rjust(w) for v, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_solve(args) -> int:
    ell = _ellipsoid(args)
    prob = _problem(args)
    r = solve_direct(ell, prob)
    d = r.diagnostics
    fields = [
        ("lat1", DEG.format(r.end_geodetic.lat)),
        ("lon1", DEG.format(r.end_geodetic.lon)),
        ("azi1", DEG.format(r.alpha1)),
        ("x1", M.format(r.end_cartesian.x)),
        ("y1", M.format(r.end_cartesian.y)),
        ("z1", M.format(r.end_cartesian.z)),
        ("steps", str(r.n)),
        ("system", prob.system),
        ("c0", M.format(d.clairaut_c0)),
        ("max_abs_delta_c", _sci(d.max_abs_delta_c)),
        ("max_abs_s", _sci(d.max_abs_surface_residual)),
        ("warnings", ";".join(d.warnings)),
    ]
    if args.format == "csv":
        text = _csv([k for k, _ in fields], [[v for _, v in fields]])
    else:
        w = max(len(k) for k, _ in fields)
        text = "".join(f"{k.ljust(w)}  {v}\n" for k, v in fields)
    _emit(args, text)
    return EXIT_OK


TRACE_COLUMNS = ("s", "lat", "lon", "azimuth", "x", "y", "z", "delta_c", "lon_unwrapped")


def _trace_rows(samples):
    return [
        [
            M.format(t.s),
            DEG.format(t.geodetic.lat),
            DEG.format(t.geodetic.lon),
            DEG.format(t.alpha),
            M.format(t.position.x),
            M.format(t.position.y),
            M.format(t.position.z),
            f"{t.delta_c:.9e}",
            DEG.format(t.lon_unwrapped),
        ]
        for t in samples
    ]


def _geojson(samples, prob: DirectProblem, n: int) -> str:
    props = {
        "system": prob.system,
        "steps": n,
        "lat0": prob.start.lat,
        "lon0": prob.start.lon,
        "azi0": prob.alpha0,
        "s01": prob.s01,
        "s": [t.s for t in samples],
        "azimuth": [t.alpha for t in samples],
        "delta_c": [t.delta_c for t in samples],
        "lon_unwrapped": [t.lon_unwrapped for t in samples],
    }
    coords = [[t.geodetic.lon, t.geodetic.lat] for t in samples]
    if len(coords) == 1:
        geom = {"type": "Point", "coordinates": coords[0]}
    else:
        geom = {"type": "LineString", "coordinates": coords}
    fc = {
        "type": "FeatureCollection",
        "features": [{"type": "Feature", "geometry": geom, "properties": props}],
    }
    return json.dumps(fc) + "\n"


def cmd_trace(args) -> int:
    ell = _ellipsoid(args)
    prob = _problem(args)
    if args.every < 1:
        raise _UsageError("--every must be >= 1")
    samples = trace_direct(ell, prob, args.every)
    if args.format == "geojson":
        text = _geojson(samples, prob, prob.steps if prob.s01 > 0 else 0)
    elif args.format == "csv":
        text = _csv(TRACE_COLUMNS, _trace_rows(samples))
    else:
        text = _table(TRACE_COLUMNS, _trace_rows(samples))
    _emit(args, text)
    return EXIT_OK


BENCH_COLUMNS = (
    "n", "group", "count", "skipped",
    "max_dr1", "id_dr1",
    "max_abs_dalpha1", "id_dalpha1",
    "max_abs_dc1", "id_dc1",
    "max_max_abs_dc", "id_max_dc",
    "max_max_abs_s", "id_max_s",
    "wall_s", "steps_per_s",
)


def _bench_rows(res):
    rows = []
    for st in res.stats.rows():
        row = [res.n, "all" if st.group == 0 else st.group, st.count, st.skipped]
        for name in ("max_delta_r1", "max_abs_delta_alpha1", "max_abs_delta_c1",
                     "max_max_abs_delta_c", "max_max_abs_s"):
            e = st.value(name)
            row += ["-", "-"] if e is None else [f"{e.value:.3e}", e.id]
        if st.group == 0:
            row += [f"{res.elapsed:.3f}", f"{res.steps_per_second:.3e}"]
        else:
            row += ["", ""]
        rows.append(row)
    return rows


def cmd_bench(args) -> int:
    ell = _ellipsoid(args)
    if args.group_size < 1 or args.every < 1 or (args.limit is not None and args.limit < 0):
        raise _UsageError("--group-size and --every must be >= 1, --limit >= 0")
    steps = args.steps or [1000]
    if any(n < 1 for n in steps):
        raise _UsageError("--steps must be >= 1")
    try:
        records = read_testset(args.testset, every=args.every, limit=args.limit)
    except TestsetParseError as exc:
        print(f"geodesic-ivp: {args.testset}: {exc}", file=sys.stderr)
        return EXIT_IO
    for rec in records:
        for msg in rec.conformance_warnings():
            print(f"geodesic-ivp: warning: {msg}", file=sys.stderr)
    if args.group:
        records = [r for r in records if classify_group(r.id, args.group_size) in args.group]
    if args.subset:
        records = [r for r in records if in_geodetic_subset(r)]
    workers = 1 if args.serial else (args.workers or os.cpu_count() or 1)
    if workers < 1:
        raise _UsageError("--workers must be >= 1")
    rows = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SafeDomainWarning)
        for n in steps:
            res = run_bench(ell, records, n, args.system, args.group_size, workers)
            rows += _bench_rows(res)
    if args.format == "csv":
        text = _csv(BENCH_COLUMNS, rows)
    else:
        text = _table(BENCH_COLUMNS, rows)
    _emit(args, text)
    return EXIT_OK


def cmd_convergence(args) -> int:
    ell = _ellipsoid(args)
    prob = _problem(args)
    if len(set(args.n_list)) < 3 or min(args.n_list) < 1:
        raise _UsageError("--n-list needs at least three distinct positive step counts")
    rep = convergence_study(ell, prob, args.n_list)
    header = ("n", "error_m", "order", "flag")
    rows = []
    for i, n in enumerate(rep.n_list):
        if i < len(rep.errors):
            err = f"{rep.errors[i]:.9e}"
        else:
            err = "reference"
        if i < len(rep.orders):
            o = rep.orders[i]
            order = "-" if o is None else f"{o:.3f}"
            flag = "outside-band" if rep.flagged[i] else ""
        else:
            order, flag = "", ""
        rows.append([n, err, order, flag])
    if args.format == "csv":
        text = _csv(header, rows)
    else:
        text = _table(header, rows)
        lo, hi = rep.band
        text += f"expected order band: [{lo}, {hi}]\n"
        if rep.degenerate:
            text += "degenerate: all errors are zero\n"
        if any(rep.flagged):
            text += "WARNING: observed order outside the expected band\n"
    for code in rep.warnings:
        text += f"solver warning: {code}\n" if args.format == "table" else ""
        print(f"geodesic-ivp: solver warning: {code}", file=sys.stderr)
    _emit(args, text)
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "trace": cmd_trace,
    "bench": cmd_bench,
    "convergence": cmd_convergence,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", SafeDomainWarning)
            return COMMANDS[args.command](args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"geodesic-ivp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeodesicError as exc:
        print(f"geodesic-ivp: solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as exc:
        print(f"geodesic-ivp: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
