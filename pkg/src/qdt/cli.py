"""Command-line front end.

Commands: ``dt``, ``series``, ``necklaces``, ``higgs`` and ``verify``.  Exit
codes are 0 on success, 1 when a check or a route comparison fails and 2 on
usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from . import verify
from .dtinv import DTRecord, dt_record
from .exactmath import LaurentPoly
from .hilbert import series_F, series_H
from .higgs import enumerate_higgs
from .necklaces import enumerate_classes, format_sequence
from .plethystic import TruncSeries, pleth_log

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _workers() -> int:
    raw = os.environ.get("QDT_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"QDT_THREADS must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("QDT_THREADS must be at least 1")
    return value


def _map_ordered(fn: Callable, jobs: Sequence[tuple]) -> list:
    """Run ``fn(*job)`` for each job, possibly in parallel; results keep job order."""
    workers = min(_workers(), len(jobs))
    if workers <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *job) for job in jobs]
        return [f.result() for f in futures]


def _span(single: int | None, upper: int | None, name: str, default: int | None = None) -> range:
    if single is not None and upper is not None:
        raise UsageError(f"--{name} and --{name}-max are mutually exclusive")
    if single is not None:
        lo = hi = single
    elif upper is not None:
        lo, hi = 1, upper
    elif default is not None:
        lo, hi = 1, default
    else:
        raise UsageError(f"one of --{name} or --{name}-max is required")
    if lo < 1:
        raise UsageError(f"--{name} values must be positive")
    return range(lo, hi + 1)


def _poly_sparse(p: LaurentPoly) -> str:
    return ";".join(f"{e}:{c}" for e, c in p.items())


# --------------------------------------------------------------------------
# dt


def _dt_cell(m: int, n: int, quantized: bool, full: bool) -> DTRecord:
    return dt_record(m, n, quantized=quantized, full=full)


def cmd_dt(args) -> int:
    ms = _span(args.m, args.m_max, "m")
    ns = _span(args.n, args.n_max, "n")
    full = args.level == "full"
    jobs = [(m, n, args.quantized, full) for m in ms for n in ns]
    records = _map_ordered(_dt_cell, jobs)

    out = sys.stdout
    if args.format == "json":
        for rec in records:
            out.write(rec.dumps() + "\n")
    elif args.format == "csv":
        route_names = sorted({k for rec in records for k in rec.routes})
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["m", "n", "dt", "dt_poly"] + route_names)
        for rec in records:
            poly = "" if rec.dt_poly is None else _poly_sparse(rec.dt_poly)
            writer.writerow([rec.m, rec.n, rec.dt_numeric, poly] + [str(rec.routes.get(k, "")).lower() for k in route_names])
    else:
        for rec in records:
            line = f"m={rec.m} n={rec.n} dt={rec.dt_numeric}"
            if rec.dt_poly is not None:
                line += f" dt(q)={rec.dt_poly.to_text()}"
            bad = [k for k, ok in rec.routes.items() if not ok]
            if full:
                line += " routes=" + ("ok" if not bad else "DISAGREE:" + ",".join(bad))
            out.write(line + "\n")

    failed = [(rec.m, rec.n) for rec in records if not all(rec.routes.values())]
    for m, n in failed:
        print(f"error: routes disagree at m={m} n={n}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# --------------------------------------------------------------------------
# series


def _build_series(kind: str, m: int, order: int, numeric: bool) -> TruncSeries:
    if kind == "F":
        return series_F(m, order, mode="numeric" if numeric else "q")
    if numeric:
        raise UsageError("--numeric only applies to F (H has a pole at q = 1)")
    if kind == "H":
        return series_H(m, order)
    return pleth_log(series_H(m, order))


def cmd_series(args) -> int:
    if args.order < 1:
        raise UsageError("--order must be positive")
    S = _build_series(args.kind, args.m, args.order, args.numeric)
    if args.format == "json":
        coeffs = [str(c.constant_value()) for c in S] if args.numeric else S.to_json()
        doc = {"kind": args.kind, "m": str(args.m), "order": str(args.order), "coeffs": coeffs}
        print(json.dumps(doc))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "coeff"])
        for n, c in enumerate(S):
            writer.writerow([n, c.to_text()])
    elif args.numeric:
        print(",".join(str(c.constant_value()) for c in S))
    else:
        print(S.to_text())
    return EXIT_OK


# --------------------------------------------------------------------------
# necklaces / higgs


def cmd_necklaces(args) -> int:
    classes = list(enumerate_classes(args.m, args.n, plus=args.plus))
    if args.format == "json":
        for C in classes:
            print(json.dumps({"rep": [str(x) for x in C.rep], "period": str(C.period), "weight": str(C.weight)}))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["rep", "period", "weight"])
        for C in classes:
            writer.writerow([format_sequence(C.rep), C.period, C.weight])
    else:
        for C in classes:
            print(f"{format_sequence(C.rep)} period={C.period} weight={C.weight}")
        print(f"{len(classes)} classes")
    return EXIT_OK


def cmd_higgs(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    seqs = list(enumerate_higgs(args.n, args.d, args.m))
    if args.format == "json":
        doc = {
            "n": str(args.n),
            "d": str(args.d),
            "m": str(args.m),
            "sequences": [[str(x) for x in s] for s in seqs],
        }
        print(json.dumps(doc))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["sequence"])
        for s in seqs:
            writer.writerow([format_sequence(s)])
    else:
        for s in seqs:
            print(format_sequence(s))
        print(f"{len(seqs)} sequences")
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def _run_check(name: str, ms: Iterable[int], ns: Iterable[int]) -> tuple[list[str], float]:
    check = verify.CHECKS_BY_NAME[name]
    start = time.perf_counter()
    try:
        problems = check.run(ms, ns)
    except Exception as exc:  # a crash is a failed check, not a crashed run
        problems = [f"{type(exc).__name__}: {exc}"]
    return problems, time.perf_counter() - start


def cmd_verify(args) -> int:
    m_max, n_max = verify.LEVELS[args.level]
    if args.m is not None:
        m_max = args.m
    if args.n is not None:
        n_max = args.n
    if m_max < 1 or n_max < 1:
        raise UsageError("--m and --n must be positive")
    if args.check:
        unknown = [c for c in args.check if c not in verify.CHECKS_BY_NAME]
        if unknown:
            raise UsageError(f"unknown check(s) {', '.join(unknown)}; known: {', '.join(verify.CHECKS_BY_NAME)}")
        selected = [verify.CHECKS_BY_NAME[c] for c in args.check]
    else:
        selected = verify.CHECKS
    jobs = []
    for c in selected:
        ms, ns = verify.check_ranges(c, m_max, n_max)
        jobs.append((c.name, ms, ns))
    results = _map_ordered(_run_check, jobs)

    failed = 0
    for (name, ms, ns), (problems, seconds) in zip(jobs, results):
        status = "PASS" if not problems else "FAIL"
        failed += bool(problems)
        line = f"{status} {name:<15} m<={ms[-1] if ms else '-'} n<={ns[-1] if ns else '-'}"
        if args.timing:
            line += f" {seconds:7.2f}s"
        line += f"  {verify.CHECKS_BY_NAME[name].description}"
        print(line)
        for p in problems[: args.max_problems]:
            print(f"    {p}")
        if len(problems) > args.max_problems:
            print(f"    ... {len(problems) - args.max_problems} more")
    print(f"{len(jobs) - failed}/{len(jobs)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


# --------------------------------------------------------------------------


def _level_flags(p: argparse.ArgumentParser, default: str) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fast", dest="level", action="store_const", const="fast")
    g.add_argument("--full", dest="level", action="store_const", const="full")
    p.set_defaults(level=default)


def _format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qdt", description="DT invariants of the m-loop quiver")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dt", help="table of DT invariants")
    p.add_argument("--m", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--quantized", action="store_true", help="also compute DT_n(q)")
    _format_flag(p)
    _level_flags(p, "fast")
    p.set_defaults(func=cmd_dt)

    p = sub.add_parser("series", help="print F, H or Log H")
    p.add_argument("kind", choices=("F", "H", "LogH"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--numeric", action="store_true", help="F at q = 1")
    _format_flag(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("necklaces", help="primitive cyclic classes of U_n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-plus", dest="plus", action="store_false", help="omit doubled classes")
    _format_flag(p)
    p.set_defaults(func=cmd_necklaces)

    p = sub.add_parser("higgs", help="Higgs-type sequences H_(n,d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _format_flag(p)
    p.set_defaults(func=cmd_higgs)

    p = sub.add_parser("verify", help="run the verification suite")
    _level_flags(p, "fast")
    p.add_argument("--check", action="append", help="run only this check (repeatable)")
    p.add_argument("--m", type=int, help="override the m bound")
    p.add_argument("--n", type=int, help="override the n bound")
    p.add_argument("--no-timing", dest="timing", action="store_false")
    p.add_argument("--max-problems", type=int, default=5)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if getattr(args, "m", None) is not None and args.m < 1:
            raise UsageError("--m must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
