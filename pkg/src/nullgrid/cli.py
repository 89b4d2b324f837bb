"""Command line driver.

Subcommands: analyze, bounds, verify, trim, coeff, pit, puzzle, tightness.
Output is JSON by default ("schema": 1, keys sorted, byte-stable across
runs for fixed inputs and seeds) or a terse text rendering with --format
text.  Exit codes: 0 success, 1 usage or input error, 2 a theorem
hypothesis is violated, 3 a resource limit was hit.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from fractions import Fraction

from . import analysis, bounds, oracle, pit, puzzle, transform
from .errors import (
    GridTooLargeError,
    HypothesisViolationError,
    NullgridError,
    ParseError,
    SearchBudgetError,
)
from .parser import infer_variables, parse_dag, parse_poly
from .poly import GridSpec
from .ring import RingSpec

SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_RESOURCE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for
    # hypothesis violations, so remap.
    def error(self, message):
        raise _UsageError(message)


def jsonable(obj):
    """Recursively convert package values to JSON-stable primitives."""
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        return obj
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(v) for v in obj)
    if hasattr(obj, "value") and hasattr(obj, "ring"):
        return obj.value
    return obj


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _UsageError(f"cannot read {path}: {e}") from None


def _load_poly(args, ring):
    if args.poly is not None and args.polyfile is not None:
        raise _UsageError("pass the polynomial inline with --poly or as a file, not both")
    if args.poly is not None:
        text, source = args.poly.strip(), "--poly"
    elif args.polyfile is not None:
        text, source = _read_text(args.polyfile).strip(), args.polyfile
    else:
        raise _UsageError("pass a polynomial file or --poly")
    names = args.vars.split(",") if args.vars else infer_variables(text)
    if not names:
        raise _UsageError(f"no variables found in {source}; pass --vars")
    return parse_poly(text, names, ring), names, text


def _load_grid(args, ring) -> GridSpec:
    spec = getattr(args, "grid", None)
    if not spec:
        raise _UsageError("this subcommand needs --grid")
    text = _read_text(spec) if os.path.exists(spec) else spec
    return GridSpec.from_text(text, ring)


def _ring_of(args) -> RingSpec:
    try:
        return RingSpec.from_string(args.ring)
    except ValueError as e:
        raise _UsageError(str(e)) from None


# -- subcommand handlers -----------------------------------------------------


def _cmd_analyze(args):
    ring = _ring_of(args)
    f, names, text = _load_poly(args, ring)
    reports = [] if f.is_zero else analysis.classify(f)
    return {
        "command": "analyze",
        "ring": str(ring),
        "vars": names,
        "polynomial": f.render(names),
        "is_zero": f.is_zero,
        "hypotheses": [jsonable(r) for r in reports],
    }


def _cmd_bounds(args):
    ring = _ring_of(args)
    f, names, _ = _load_poly(args, ring)
    grid = _load_grid(args, ring)
    return {
        "command": "bounds",
        "ring": str(ring),
        "vars": names,
        "polynomial": f.render(names),
        "grid": [list(s) for s in grid.sets],
        "bounds": [jsonable(b) for b in bounds.collect_bounds(f, grid)],
    }


def _cmd_verify(args):
    ring = _ring_of(args)
    f, names, _ = _load_poly(args, ring)
    grid = _load_grid(args, ring)
    report = oracle.verify_bounds(f, grid, workers=args.threads,
                                  point_limit=args.limit_grid)
    payload = {
        "command": "verify",
        "ring": str(ring),
        "vars": names,
        "polynomial": f.render(names),
        "grid": [list(s) for s in grid.sets],
        "grid_size": report.grid_size,
        "nonzero_count": report.nonzero_count,
        "zero_count": report.zero_count,
        "all_guaranteed_sound": report.all_guaranteed_sound,
        "checks": [
            {"bound": jsonable(c.report), "sound": c.sound, "slack": c.slack}
            for c in report.checks
        ],
    }
    if args.list_zeros:
        count = oracle.count_nonzeros(f, grid, point_limit=args.limit_grid)
        payload["zeros"] = [list(pt) for pt in (count.zero_set or ())]
    return payload


def _cmd_trim(args):
    ring = _ring_of(args)
    f, names, _ = _load_poly(args, ring)
    grid = _load_grid(args, ring)
    g = transform.trim(f, grid)
    payload = {
        "command": "trim",
        "ring": str(ring),
        "vars": names,
        "polynomial": f.render(names),
        "trimmed": g.render(names),
        "term_count": len(g.terms),
    }
    if not f.is_zero:
        payload["degrees_before"] = list(f.degrees()[0])
    if not g.is_zero:
        payload["degrees_after"] = list(g.degrees()[0])
    return payload


def _cmd_coeff(args):
    ring = _ring_of(args)
    f, names, _ = _load_poly(args, ring)
    grid = _load_grid(args, ring)
    d = _parse_vector(args.monomial, grid.arity)
    values = transform.grid_values(f, grid)
    c = transform.coefficient_via_grid(values, grid, d)
    return {
        "command": "coeff",
        "ring": str(ring),
        "vars": names,
        "polynomial": f.render(names),
        "monomial": list(d),
        "coefficient": c.value,
        "stored_coefficient": f.coefficient(d).value,
    }


def _cmd_pit(args):
    ring = _ring_of(args)
    names = args.vars.split(",") if args.vars else sorted(
        set(infer_variables(args.expr1)) | set(infer_variables(args.expr2)))
    if not names:
        raise _UsageError("no variables found; pass --vars")
    g1 = parse_dag(args.expr1, names, ring)
    g2 = parse_dag(args.expr2, names, ring)
    verdict = pit.identity_test(g1, g2, samples_per_var=args.samples,
                                trials=args.trials, seed=args.seed)
    return {
        "command": "pit",
        "ring": str(ring),
        "vars": names,
        "verdict": jsonable(verdict),
    }


def _cmd_puzzle(args):
    if args.mode == "exhaustive":
        result = puzzle.exhaustive_search(args.size, args.range, budget=args.budget)
        extra = {"examined": result.examined}
    else:
        result = puzzle.local_search(args.size, budget=args.budget, seed=args.seed,
                                     value_range=args.range)
        extra = {"steps": result.steps, "restarts": result.restarts,
                 "history": [list(h) for h in result.history]}
    inst = result.instance
    return {
        "command": "puzzle",
        "mode": args.mode,
        "s": inst.s,
        "instance": jsonable(inst),
        "multiplication_table": inst.multiplication_table(),
        "addition_table": inst.addition_table(),
        "agreements": sorted(result.pattern.cells),
        "count": result.pattern.count,
        "k22_free": puzzle.k22_check(result.pattern),
        "zarankiewicz_cap": puzzle.zarankiewicz_k22_bound(inst.s),
        **extra,
    }


def _cmd_tightness(args):
    ring = _ring_of(args)
    grid = _load_grid(args, ring)
    d = _parse_vector(args.d, grid.arity)
    f = oracle.tightness_family(grid, d)
    count = oracle.count_nonzeros(f, grid, collect_zeros=False,
                                  point_limit=args.limit_grid)
    expected = 1
    for s, di in zip(grid.sizes, d):
        expected *= s - di
    return {
        "command": "tightness",
        "ring": str(ring),
        "grid": [list(s) for s in grid.sets],
        "d": list(d),
        "polynomial": f.render(),
        "nonzero_count": count.nonzeros,
        "product_value": expected,
        "slack": count.nonzeros - expected,
    }


def _parse_vector(text: str, arity: int) -> tuple[int, ...]:
    try:
        d = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise _UsageError(f"bad integer vector {text!r}") from None
    if len(d) != arity:
        raise _UsageError(f"vector {text!r} has {len(d)} entries, grid has {arity} variables")
    return d


# -- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="nullgrid", description=__doc__.splitlines()[0])
    top.add_argument("--format", choices=("json", "text"), default="json")
    sub = top.add_subparsers(dest="cmd", required=True)

    def common(p, grid=True, poly=True):
        p.add_argument("--ring", default="int", help="fp:<p>, int, or zmod:<m>")
        p.add_argument("--vars", default=None, help="comma-separated variable names")
        if poly:
            p.add_argument("polyfile", nargs="?", default=None,
                           help="file with one polynomial expression")
            p.add_argument("--poly", default=None,
                           help="polynomial expression given inline")
        if grid:
            p.add_argument("--grid", required=False,
                           help="grid: ';'-separated variable sets of comma-separated "
                                "elements or a..b ranges, or a file with one set per line")
        return p

    common(sub.add_parser("analyze", help="detect monomial hypotheses"), grid=False)
    common(sub.add_parser("bounds", help="list certified lower bounds"))
    v = common(sub.add_parser("verify", help="check every bound against brute force"))
    v.add_argument("--list-zeros", action="store_true")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--limit-grid", type=int, default=oracle.DEFAULT_POINT_LIMIT)
    common(sub.add_parser("trim", help="reduce modulo the grid annihilators"))
    c = common(sub.add_parser("coeff", help="coefficient of a monomial from grid values"))
    c.add_argument("--monomial", required=True, help="comma-separated exponents")

    p = sub.add_parser("pit", help="randomized identity test of two expressions")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.add_argument("--ring", default="fp:101")
    p.add_argument("--vars", default=None)
    p.add_argument("--samples", type=int, required=True, help="samples per variable")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    z = sub.add_parser("puzzle", help="search for table agreement patterns")
    z.add_argument("mode", choices=("exhaustive", "local"))
    z.add_argument("--size", type=int, required=True, help="table side s")
    z.add_argument("--range", type=int, default=8, help="entries live in [-R, R]")
    z.add_argument("--budget", type=int, default=100_000)
    z.add_argument("--seed", type=int, default=0)

    t = sub.add_parser("tightness", help="product-bound-tight polynomial for a grid")
    t.add_argument("--ring", default="int")
    t.add_argument("--grid", required=True)
    t.add_argument("--d", required=True, help="comma-separated subset sizes")
    t.add_argument("--limit-grid", type=int, default=oracle.DEFAULT_POINT_LIMIT)
    return top


_HANDLERS = {
    "analyze": _cmd_analyze,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
    "trim": _cmd_trim,
    "coeff": _cmd_coeff,
    "pit": _cmd_pit,
    "puzzle": _cmd_puzzle,
    "tightness": _cmd_tightness,
}


def _emit(payload: dict, fmt: str):
    payload = {"schema": SCHEMA, **payload}
    if fmt == "json":
        print(json.dumps(jsonable(payload), sort_keys=True, indent=2))
    else:
        for key, value in payload.items():
            if isinstance(value, (list, dict)):
                value = json.dumps(jsonable(value), sort_keys=True)
            print(f"{key}: {value}")


def _emit_error(code: str, message: str, fmt: str):
    payload = {"schema": SCHEMA, "error": {"code": code, "message": message}}
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"error ({code}): {message}")


def main(argv=None) -> int:
    parser = build_parser()
    fmt = "json"
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        payload = _HANDLERS[args.cmd](args)
    except _UsageError as e:
        _emit_error("usage", str(e), fmt)
        return EXIT_USAGE
    except ParseError as e:
        _emit_error("parse", str(e), fmt)
        return EXIT_USAGE
    except HypothesisViolationError as e:
        _emit_error("hypothesis-violation", str(e), fmt)
        return EXIT_HYPOTHESIS
    except (GridTooLargeError, SearchBudgetError) as e:
        _emit_error("resource-limit", str(e), fmt)
        return EXIT_RESOURCE
    except (NullgridError, ValueError) as e:
        _emit_error("invalid-input", str(e), fmt)
        return EXIT_USAGE
    _emit(payload, fmt)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
