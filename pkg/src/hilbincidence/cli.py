"""Command-line front end.

Exit codes: 0 success (condition holds / witness passes), 1 a condition fails
or a witness mismatches, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .arrows import necessary_condition
from .atlas import cached_atlas
from .families import load_family, verify_witness
from .grassmannian import BudgetExceeded, equivalence_table
from .staircase import (
    STANDARD,
    Box,
    Grading,
    dual,
    enumerate_staircases,
    format_generators,
    parse_staircase,
)
from .yameogo import profile


class InputError(Exception):
    pass


def _grading(text: str) -> Grading:
    try:
        a, b = (int(v) for v in text.split(","))
        return Grading.of(a, b)
    except ValueError as exc:
        raise InputError(f"bad grading {text!r}: {exc}") from exc


def _hilbert(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError as exc:
        raise InputError(f"bad Hilbert function {text!r}") from exc


def _staircase(text: str):
    try:
        return parse_staircase(text)
    except ValueError as exc:
        raise InputError(f"bad staircase {text!r}: {exc}") from exc


def _box(text):
    if text is None:
        return None
    try:
        return Box.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_enumerate(args) -> int:
    g = _grading(args.grading)
    stairs = enumerate_staircases(g, _hilbert(args.hilbert))
    if args.format == "json":
        rows = [
            {"generators": E.to_json()["generators"], "profile": profile(g, E).to_json()} for E in stairs
        ]
        print(json.dumps(rows))
        return 0
    for i, E in enumerate(stairs):
        print(f"n{i}\t({E.label()})\t{profile(g, E).to_json()}")
    return 0


def cmd_check(args) -> int:
    g = _grading(args.grading)
    E, F = _staircase(args.source), _staircase(args.target)
    if len(E) != len(F):
        raise InputError(f"staircases have different lengths ({len(E)} vs {len(F)})")
    box = _box(args.box)
    if box is not None and not (E.fits(box) and F.fits(box)):
        raise InputError(f"staircases do not fit in the {box} box")
    report = necessary_condition(g, E, F, box)
    if args.format == "json":
        print(json.dumps(report.to_json(witnesses=args.witnesses), sort_keys=True))
    else:
        print(f"source    ({E.label()})")
        print(f"target    ({F.label()})")
        print(f"box       {report.box}")
        print(f"yameogo   {report.yameogo}")
        print(f"cond1     {report.cond1}")
        print(f"cond2     {report.cond2}")
        if args.witnesses:
            print(f"witness1  {json.dumps(report.witness1.to_json()) if report.witness1 else None}")
            print(f"witness2  {json.dumps(report.witness2.to_json()) if report.witness2 else None}")
    return 0 if report.holds else 1


def cmd_atlas(args) -> int:
    g = _grading(args.grading)
    cache = Path(args.cache_dir) if args.cache_dir else None
    jobs = args.jobs if args.jobs > 0 else (os.cpu_count() or 1)
    atlas = cached_atlas(g, _hilbert(args.hilbert), cache, _box(args.box), jobs)
    if args.format == "json":
        print(json.dumps(atlas.to_json(), sort_keys=True, indent=1))
    else:
        sys.stdout.write(atlas.to_dot())
    return 0


def cmd_verify(args) -> int:
    try:
        fam = load_family(args.family, args.variant)
    except (OSError, KeyError, ValueError) as exc:
        raise InputError(f"cannot load family {args.family!r}: {exc}") from exc
    E, F = _staircase(args.source), _staircase(args.target)
    report = verify_witness(fam, E, F, _box(args.box))
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(f"family    {fam.name or args.family}")
        print(f"generic   ({report.generic.label()})  expected ({E.label()})")
        limit = f"({report.limit.label()})" if report.limit is not None else "not a staircase"
        print(f"limit     {limit}  expected ({F.label()})")
        print(f"ranks     generic {list(report.generic_ranks)} limit {list(report.limit_ranks)}")
        print(f"closure   {'ok' if report.closure_ok else 'FAILED'}")
        for p in report.problems:
            print(f"  - {p}")
        if report.extracted is not None:
            print(f"co-system {json.dumps(report.extracted.to_json())}")
        print("result    " + ("pass" if report.passed else "mismatch"))
    return 0 if report.passed else 1


def cmd_grassmann(args) -> int:
    try:
        rows = equivalence_table(args.n, args.k, _box(args.box), args.budget)
    except BudgetExceeded as exc:
        raise InputError(str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print("p\tq\tclassical\tcond1\tcond2")
    for r in rows:
        print(f"{r.p.p}\t{r.q.p}\t{r.classical}\t{r.cond1}\t{r.cond2}")
    ok = all(r.agrees for r in rows)
    print("equivalent: " + ("yes" if ok else "no"))
    return 0 if ok else 1


def cmd_dual(args) -> int:
    E = _staircase(args.staircase)
    box = _box(args.box) or Box(max(len(E), 1), max(len(E), 1))
    if not E.fits(box):
        raise InputError(f"({E.label()}) does not fit in the {box} box")
    D = dual(E, box)
    print(json.dumps(D.to_json()) if args.format == "json" else format_generators(D.generators()))
    return 0


def cmd_profile(args) -> int:
    g = _grading(args.grading)
    print(json.dumps(profile(g, _staircase(args.staircase)).to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbincidence",
        description="Necessary conditions for incidences of Schubert cells on equivariant Hilbert schemes.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    standard = f"{STANDARD.a},{STANDARD.b}"

    p = sub.add_parser("enumerate", help="list staircases with a Hilbert function")
    p.add_argument("--hilbert", required=True, help="h0,h1,...")
    p.add_argument("--grading", default=standard, help="a,b (default 1,-1)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="test both arrow conditions for a pair")
    p.add_argument("source", help="generators of E, e.g. 'y^4,x*y^2,x^2*y,x^5'")
    p.add_argument("target", help="generators of F")
    p.add_argument("--grading", default=standard)
    p.add_argument("--box", help="MxN box for the duals (default nxn)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--witnesses", action="store_true", help="print the arrow systems found")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("atlas", help="incidence-candidate digraph")
    p.add_argument("--hilbert", required=True)
    p.add_argument("--grading", default=standard)
    p.add_argument("--box")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--cache-dir")
    p.add_argument("--jobs", type=int, default=0, help="worker processes for pair checks (0: one per CPU)")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("verify", help="verify a one-parameter witness family")
    p.add_argument("family", help="family JSON file or bundled name (T, U, V, W, Z)")
    p.add_argument("source", help="expected generic staircase")
    p.add_argument("target", help="expected limit staircase")
    p.add_argument("--variant", help="alternate reading stored in the family file")
    p.add_argument("--box")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("grassmann", help="Grassmannian equivalence table")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--box")
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(func=cmd_grassmann)

    p = sub.add_parser("dual", help="dual staircase in a box")
    p.add_argument("staircase")
    p.add_argument("--box")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("profile", help="counting profile along the monomial order")
    p.add_argument("staircase")
    p.add_argument("--grading", default=standard)
    p.set_defaults(func=cmd_profile)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
