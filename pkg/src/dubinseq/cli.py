"""Command-line front end.

Subcommands:

* gen    -- sample a random instance and write it as JSON
* solve  -- solve an instance; write the solution document and, on
            request, an SVG of the three offset candidates
* lb     -- compute the lower bounds / grid witness for an instance
* bench  -- sweep instance sizes, 100 seeds each, and report per-size
            ratio and timing aggregates as CSV (plus a PNG chart next
            to the CSV when writing to a file)

Exit codes: 0 success, 1 for any domain error (bad document, infeasible
geometry, ...) with a diagnostic on stderr, 2 for usage errors (argparse
default).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

from .bounds import HeadingGrid, bounds_document, compute_bounds
from .errors import DubinseqError
from .instances import generate, read_instance_file, write_instance, write_instance_file
from .sequence import solution_document, solve_sequence
from .svg import write_svg

BENCH_SIZES = (12, 15, 18, 21, 24, 27, 30)
BENCH_COUNT = 100
BENCH_RHO = 100.0
DEFAULT_EPS = 1e-4

# per-instance seed for size n, repetition k under master seed m
def bench_seed(master: int, n: int, rep: int) -> int:
    return master * 1_000_000 + n * 1_000 + rep


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def cmd_gen(args: argparse.Namespace) -> int:
    inst = generate(args.n, args.rho, extent=args.extent, seed=args.seed)
    if args.output is None or args.output == "-":
        _write_text(None, write_instance(inst))
    else:
        write_instance_file(inst, args.output)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    inst = read_instance_file(args.instance)
    grid = HeadingGrid(args.intervals)
    report = solve_sequence(inst, eps=args.eps, grid=grid)
    _write_text(args.output, json.dumps(solution_document(report), indent=2))
    if args.svg:
        write_svg(report, args.svg)
    return 0


def cmd_lb(args: argparse.Namespace) -> int:
    inst = read_instance_file(args.instance)
    grid = HeadingGrid(args.intervals)
    doc = bounds_document(compute_bounds(inst, grid))
    _write_text(args.output, json.dumps(doc, indent=2))
    return 0


def bench_rows(
    sizes: tuple[int, ...],
    count: int,
    rho: float,
    eps: float,
    intervals: int,
    master_seed: int,
    timing: bool = True,
) -> list[dict]:
    grid = HeadingGrid(intervals)
    bound_label = f"{1.0 + math.pi / 3.0:.4f}"
    rows = []
    for n in sizes:
        ratios = []
        ratios_guaranteed = []
        elapsed = []
        for rep in range(count):
            inst = generate(n, rho, seed=bench_seed(master_seed, n, rep))
            t0 = time.perf_counter()
            report = solve_sequence(inst, eps=eps, grid=grid)
            elapsed.append(time.perf_counter() - t0)
            ratios.append(report.proxy_ratio)
            ratios_guaranteed.append(report.a_posteriori_ratio)
        rows.append(
            {
                "n": n,
                "theoretical_bound": bound_label,
                "max_ratio": max(ratios),
                "avg_ratio": sum(ratios) / len(ratios),
                "avg_runtime_ms": (1000.0 * sum(elapsed) / len(elapsed)) if timing else 0.0,
                "max_ratio_guaranteed": max(ratios_guaranteed),
                "avg_ratio_guaranteed": sum(ratios_guaranteed) / len(ratios_guaranteed),
            }
        )
    return rows


def bench_csv(rows: list[dict]) -> str:
    # max_ratio / avg_ratio reference the non-guaranteed grid proxy; the
    # *_guaranteed columns reference the Euclidean lower bound.
    buf = io.StringIO()
    writer = csv.writer(buf)  # RFC-4180: comma separated, CRLF line ends
    writer.writerow(
        [
            "n",
            "theoretical_bound",
            "max_ratio",
            "avg_ratio",
            "avg_runtime_ms",
            "max_ratio_guaranteed",
            "avg_ratio_guaranteed",
        ]
    )
    for r in rows:
        writer.writerow(
            [
                r["n"],
                r["theoretical_bound"],
                f"{r['max_ratio']:.6f}",
                f"{r['avg_ratio']:.6f}",
                f"{r['avg_runtime_ms']:.3f}",
                f"{r['max_ratio_guaranteed']:.6f}",
                f"{r['avg_ratio_guaranteed']:.6f}",
            ]
        )
    return buf.getvalue()


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = tuple(int(s) for s in args.sizes.split(","))
    rows = bench_rows(
        sizes, args.count, args.rho, args.eps, args.intervals, args.seed,
        timing=not args.no_timing,
    )
    text = bench_csv(rows)
    if args.csv is None or args.csv == "-":
        sys.stdout.write(text)
    else:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        from .figures import bench_figure

        out = args.csv
        stem = out[: -len(".csv")] if out.endswith(".csv") else out
        bench_figure(rows, stem + ".png")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dubinseq",
        description="curvature-constrained shortest paths through ordered waypoints",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="sample a random instance")
    p.add_argument("--n", type=int, required=True, help="number of waypoints (>= 3)")
    p.add_argument("--rho", type=float, required=True, help="turning radius")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (PCG64)")
    p.add_argument("--extent", type=float, default=None,
                   help="square window side (default 10*rho*sqrt(n))")
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance", help="instance JSON path")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS,
                   help="three-point solver tolerance (default 1e-4)")
    p.add_argument("--intervals", type=int, default=32,
                   help="heading intervals per waypoint for the bounds (default 32)")
    p.add_argument("-o", "--output", default=None, help="solution JSON path (default stdout)")
    p.add_argument("--svg", default=None, help="also draw the three candidates to this SVG path")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("lb", help="lower bounds / grid witness only")
    p.add_argument("instance", help="instance JSON path")
    p.add_argument("--intervals", type=int, default=32)
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_lb)

    p = sub.add_parser("bench", help="per-size ratio/runtime table (CSV)")
    p.add_argument("--sizes", default=",".join(str(s) for s in BENCH_SIZES),
                   help="comma-separated waypoint counts")
    p.add_argument("--count", type=int, default=BENCH_COUNT, help="instances per size")
    p.add_argument("--rho", type=float, default=BENCH_RHO)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--intervals", type=int, default=32)
    p.add_argument("--seed", type=int, default=1, help="master seed; per-instance seeds derive from it")
    p.add_argument("--csv", default=None,
                   help="CSV output path (default stdout); a PNG chart lands next to it")
    p.add_argument("--no-timing", action="store_true",
                   help="write 0.0 runtimes so output is byte-reproducible")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DubinseqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
