"""Command-line front door: plan, build, verify, search, fold, and bound.

Exit codes: 0 success / valid; 1 invalid verification; 2 usage error;
3 outcome not obtained (open classification, certified nonexistence,
search budget exhausted, or a missing external ingredient).
"""

from __future__ import annotations

import argparse
import json
import sys
import tempfile
from pathlib import Path

from .apps import MissingIngredient, build_bsec2, build_ooc_nm, fold_ooc
from .core import Design, DesignParams, Kind
from .engine import (
    PlanNotExecutable,
    Status,
    execute_plan,
    plan,
)
from .families import FamilyId, build_family, quasi_skew_starter
from .search import (
    BudgetExhausted,
    NotFound,
    SearchBudget,
    cache_put,
    confirm_nonexistence_5_1_4,
    search,
)
from .verify import johnson_bound, verify, verify_quasi_skew_starter

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_UNOBTAINED = 3


def _parse_budget(text: str | None) -> SearchBudget | None:
    """Budget flag format: NODES or NODES:WALL_SECONDS."""
    if not text:
        return None
    nodes, _, wall = text.partition(":")
    try:
        return SearchBudget(
            max_nodes=int(nodes),
            wall_s=float(wall) if wall else SearchBudget.wall_s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad budget {text!r}: {exc}")


def _emit_design(design: Design, args) -> None:
    if args.out:
        Path(args.out).write_text(design.to_json())
    if getattr(args, "json", False):
        print(design.to_json())
    else:
        p = design.params
        print(f"{p.kind.value}: n={p.n} m={p.m} t={p.t} k={list(p.k)} "
              f"lambda={p.lam}; {len(design.base_blocks)} base blocks")
        print(f"provenance: {design.provenance}")


def _load_ingredients(args) -> str | None:
    """Place --ingredient files into the effective cache directory so the
    searches pick them up (each file is verified on load by cache_get)."""
    files = getattr(args, "ingredient", None) or []
    cache_dir = getattr(args, "cache_dir", None)
    if files and not cache_dir:
        cache_dir = tempfile.mkdtemp(prefix="forge-ingredients-")
    for f in files:
        design = Design.from_json(Path(f).read_text())
        report = verify(design)
        if not report.valid:
            raise ValueError(f"ingredient {f} fails verification: "
                             f"{report.summary()}")
        cache_put(design, cache_dir)
    return cache_dir


# ---------------------------------------------------------------------------
# verb handlers
# ---------------------------------------------------------------------------

def _cmd_plan(args) -> int:
    node = plan(args.n, args.m, args.t)
    if args.json:
        print(node.to_json())
    else:
        print(node.pretty())
    return EXIT_OK if node.status is Status.EXISTS else EXIT_UNOBTAINED


def _cmd_build(args) -> int:
    if args.kind != "schgdd":
        print(f"unknown build target {args.kind!r} (only: schgdd)",
              file=sys.stderr)
        return EXIT_USAGE
    cache_dir = _load_ingredients(args)
    node = plan(args.n, args.m, args.t)
    try:
        result = execute_plan(node, budget=_parse_budget(args.budget),
                              cache_dir=cache_dir, threads=args.threads)
    except PlanNotExecutable as exc:
        print(f"not buildable: {exc}", file=sys.stderr)
        return EXIT_UNOBTAINED
    if result.design is None:
        for line in result.skipped:
            print(f"skipped: {line}", file=sys.stderr)
        return EXIT_UNOBTAINED
    _emit_design(result.design, args)
    for line in result.log:
        print(f"# {line}", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    design = Design.from_json(Path(args.file).read_text())
    report = verify(design, threads=args.threads)
    print(report.summary())
    return EXIT_OK if report.valid else EXIT_INVALID


_SEARCH_SHAPES = {
    # token: (argument names, params builder)
    "schgdd": (("n", "m", "t"),
               lambda a: DesignParams(kind=Kind.SCHGDD, n=a[0], m=a[1],
                                      t=a[2])),
    "scgdd": (("n", "m"),
              lambda a: DesignParams(kind=Kind.SCGDD, n=a[0], m=a[1])),
    "gdd": (("t", "w", "sizes"),
            lambda a: DesignParams(kind=Kind.CYCLIC_GDD, n=a[0], m=a[1],
                                   k=a[2])),
    "mgdd": (("rows", "cols"),
             lambda a: DesignParams(kind=Kind.MGDD, n=a[0], t=a[1])),
    "pbd": (("v", "sizes"),
            lambda a: DesignParams(kind=Kind.PBD, n=a[0], k=a[1])),
    "pdf": (("v", "sizes"),
            lambda a: DesignParams(kind=Kind.PDF, n=a[0], k=a[1])),
    "cdm": (("v",),
            lambda a: DesignParams(kind=Kind.CDM, n=3, m=a[0])),
    "bsec1": (("m",),
              lambda a: DesignParams(kind=Kind.CYCLIC_BSEC1, n=a[0])),
    "ooc": (("n", "m"),
            lambda a: DesignParams(kind=Kind.OOC2D, n=a[0], m=a[1], k=(3,),
                                   lam=1)),
}


def _cmd_search(args) -> int:
    shape = _SEARCH_SHAPES.get(args.kind)
    if shape is None:
        print(f"unknown search kind {args.kind!r} "
              f"(one of: {', '.join(sorted(_SEARCH_SHAPES))})",
              file=sys.stderr)
        return EXIT_USAGE
    names, make = shape
    raw = args.params
    if len(raw) != len(names):
        print(f"search {args.kind} needs {len(names)} parameters "
              f"({' '.join(names)}), got {len(raw)}", file=sys.stderr)
        return EXIT_USAGE
    vals = []
    for name, token in zip(names, raw):
        if name == "sizes":
            vals.append(tuple(int(x) for x in token.split(",")))
        else:
            vals.append(int(token))
    params = make(vals)
    res = search(params, _parse_budget(args.budget))
    if isinstance(res, NotFound):
        print(f"no such design: space exhausted after {res.nodes} nodes "
              f"({res.elapsed_s:.1f}s)", file=sys.stderr)
        return EXIT_UNOBTAINED
    if isinstance(res, BudgetExhausted):
        print(f"budget exhausted after {res.nodes} nodes "
              f"({res.elapsed_s:.1f}s)", file=sys.stderr)
        return EXIT_UNOBTAINED
    _emit_design(res, args)
    return EXIT_OK


def _cmd_direct(args) -> int:
    try:
        fid = FamilyId(args.family)
    except ValueError:
        print(f"unknown family {args.family!r} "
              f"(one of: {', '.join(f.value for f in FamilyId)})",
              file=sys.stderr)
        return EXIT_USAGE
    design = build_family(fid, args.n, args.m, args.t)
    report = verify(design, threads=args.threads)
    if not report.valid:
        print(report.summary(), file=sys.stderr)
        return EXIT_INVALID
    _emit_design(design, args)
    return EXIT_OK


def _cmd_starter(args) -> int:
    if args.n < 7 or args.n % 2 == 0:
        print(f"starter requires odd n >= 7, got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    try:
        pairs = quasi_skew_starter(args.n)
    except ValueError as exc:
        # a table row that degenerates is quarantined, not patched
        print(f"starter table defect: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = verify_quasi_skew_starter(pairs, args.n)
    if args.json:
        print(json.dumps({"n": args.n, "pairs": pairs,
                          "valid": report.valid}))
    else:
        print(" ".join(f"{{{x},{y}}}" for x, y in pairs))
        print(report.summary())
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_bsec(args) -> int:
    cache_dir = _load_ingredients(args)
    design = build_bsec2(args.n, args.m, budget=_parse_budget(args.budget),
                         cache_dir=cache_dir)
    report = verify(design, threads=args.threads)
    if not report.valid:
        print(report.summary(), file=sys.stderr)
        return EXIT_INVALID
    _emit_design(design, args)
    return EXIT_OK


def _cmd_ooc(args) -> int:
    cache_dir = _load_ingredients(args)
    design = build_ooc_nm(args.n, args.m, budget=_parse_budget(args.budget),
                          cache_dir=cache_dir)
    report = verify(design, threads=args.threads)
    if not report.valid:
        print(report.summary(), file=sys.stderr)
        return EXIT_INVALID
    _emit_design(design, args)
    return EXIT_OK


def _cmd_ooc_fold(args) -> int:
    code = Design.from_json(Path(args.file).read_text())
    folded = fold_ooc(code, args.m1)
    report = verify(folded, threads=args.threads)
    if not report.valid:
        print(report.summary(), file=sys.stderr)
        return EXIT_INVALID
    _emit_design(folded, args)
    return EXIT_OK


def _cmd_bound(args) -> int:
    print(johnson_bound(args.n, args.m, args.k, args.lam))
    return EXIT_OK


def _cmd_nonexist(args) -> int:
    result = confirm_nonexistence_5_1_4()
    if args.json:
        print(json.dumps(result))
    else:
        print(f"row patterns: {result['unique_row_patterns']}; "
              f"nodes: {result['nodes']}; solutions: {result['solutions']}; "
              f"{result['elapsed_s']}s")
    return EXIT_OK if result["solutions"] == 0 else EXIT_INVALID


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def _add_common(sp, out=True, budget=False, threads=False,
                ingredients=False) -> None:
    sp.add_argument("--json", action="store_true",
                    help="machine-readable output")
    if out:
        sp.add_argument("--out", help="write the result as JSON to this file")
    if budget:
        sp.add_argument("--budget", default=None,
                        help="search budget: NODES or NODES:WALL_SECONDS")
    if threads:
        sp.add_argument("--threads", type=int, default=1,
                        help="verifier worker processes")
    if ingredients:
        sp.add_argument("--ingredient", action="append", default=[],
                        help="JSON design file placed into the cache "
                             "(repeatable)")
        sp.add_argument("--cache-dir", default=None,
                        help="design cache directory (also FORGE_CACHE_DIR)")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="forge",
        description="Construct and verify semi-cyclic holey designs, "
                    "sampling plans, and optical orthogonal codes.")
    sub = ap.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("plan", help="classify (n, m^t) and print the route")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("t", type=int)
    _add_common(sp, out=False)
    sp.set_defaults(fn=_cmd_plan)

    sp = sub.add_parser("build", help="plan and execute a target design")
    sp.add_argument("kind", help="target kind (schgdd)")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("t", type=int)
    _add_common(sp, budget=True, threads=True, ingredients=True)
    sp.set_defaults(fn=_cmd_build)

    sp = sub.add_parser("verify", help="verify a design JSON file")
    sp.add_argument("file")
    _add_common(sp, out=False, threads=True)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("search", help="backtracking search for a design")
    sp.add_argument("kind", help=", ".join(sorted(_SEARCH_SHAPES)))
    sp.add_argument("params", nargs="*",
                    help="shape parameters; size lists comma-separated")
    _add_common(sp, budget=True)
    sp.set_defaults(fn=_cmd_search)

    sp = sub.add_parser("direct", help="expand an explicit base-block family")
    sp.add_argument("family", help=", ".join(f.value for f in FamilyId))
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("t", type=int)
    _add_common(sp, threads=True)
    sp.set_defaults(fn=_cmd_direct)

    sp = sub.add_parser("starter", help="pairing of Z_n with skew sums")
    sp.add_argument("n", type=int)
    _add_common(sp, out=False)
    sp.set_defaults(fn=_cmd_starter)

    sp = sub.add_parser("bsec", help="2-D sampling plan excluding "
                                     "contiguous units")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    _add_common(sp, budget=True, threads=True, ingredients=True)
    sp.set_defaults(fn=_cmd_bsec)

    sp = sub.add_parser("ooc", help="optimal 2-D optical orthogonal code")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    _add_common(sp, budget=True, threads=True, ingredients=True)
    sp.set_defaults(fn=_cmd_ooc)

    sp = sub.add_parser("ooc-fold", help="fold a code's columns into rows")
    sp.add_argument("file")
    sp.add_argument("m1", type=int)
    _add_common(sp, threads=True)
    sp.set_defaults(fn=_cmd_ooc_fold)

    sp = sub.add_parser("bound", help="upper bound on code size")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("lam", type=int)
    _add_common(sp, out=False)
    sp.set_defaults(fn=_cmd_bound)

    sp = sub.add_parser("nonexist-5-1-4",
                        help="exhaust the reduced space for the (5,1^4) "
                             "target and count solutions")
    _add_common(sp, out=False)
    sp.set_defaults(fn=_cmd_nonexist)

    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except MissingIngredient as exc:
        print(f"missing ingredient: {exc}", file=sys.stderr)
        return EXIT_UNOBTAINED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
