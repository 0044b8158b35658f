"""Command-line interface: verify, construct, search, table, density.

Every command prints a human-readable report by default and a canonical
JSON document (schema "v1") with --json.  Exit codes are scriptable:
0 success/valid, 1 property does not hold, 2 usage error, 3 search budget
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .circulant import CirculantGraph
from .codes import Code, Kind
from .constructions import (
    PeriodicCode,
    density,
    identifying_code_for,
    identifying_code_size,
    locating_code_for,
    locating_code_size,
    verify_periodic,
)
from .errors import BudgetExceeded, CircodesError, UnsupportedOrder
from .search import exists_code_of_size, lower_bound, min_code_size, resolve_budget

SCHEMA_VERSION = "v1"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

DENSITY_FLOORS = {Kind.LOCATING: Fraction(1, 3), Kind.IDENTIFYING: Fraction(4, 11)}


class UsageError(Exception):
    pass


def _parse_kind(text: str) -> Kind:
    try:
        return Kind(text)
    except ValueError:
        raise UsageError(f"unknown kind {text!r}; expected one of "
                         f"{', '.join(k.value for k in Kind)}")


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(p) for p in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"malformed {what}: {text!r}")


def _parse_code_arg(text: str) -> list[int]:
    """Comma-separated vertices, or @path to a file with one vertex per line."""
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                lines = [ln.strip() for ln in fh]
        except OSError as exc:
            raise UsageError(f"cannot read code file: {exc}")
        return _parse_ints(" ".join(ln for ln in lines if ln), "code file")
    return _parse_ints(text, "code")


def _manifest(command: str, params: dict, outcome: dict, t0: float) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "parameters": params,
        "outcome": outcome,
        "timing": {"seconds": round(time.perf_counter() - t0, 6)},
    }


def _emit(manifest: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(manifest, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    kind = _parse_kind(args.kind)
    offsets = _parse_ints(args.offsets, "offsets")
    members = _parse_code_arg(args.code)
    g = CirculantGraph(args.n, offsets)
    code = Code(g, members)
    result = code.verify(kind)
    outcome: dict = {
        "status": result.status.value,
        "valid": result.ok,
        "size": len(code),
        "witness": list(result.witness) if isinstance(result.witness, tuple)
                   else result.witness,
    }
    lines = [f"{code!r}: {result.status.value}"
             + (f", witness {result.witness}" if result.witness is not None else "")]
    if args.shadows:
        shadows = {u: sorted(code.shadow(u)) for u in range(g.n)}
        outcome["shadows"] = {str(u): s for u, s in shadows.items()}
        lines += [f"  shadow[{u}] = {s}" for u, s in shadows.items()]
    if args.shares and result.ok:
        shares = {u: code.share(u) for u in sorted(code.members)}
        outcome["shares"] = {str(u): _fraction_str(s) for u, s in shares.items()}
        outcome["sum_of_shares"] = _fraction_str(code.sum_of_shares())
        lines += [f"  share[{u}] = {_fraction_str(s)}" for u, s in shares.items()]
        lines.append(f"  sum of shares = {outcome['sum_of_shares']}")
    if args.heavy is not None and result.ok:
        thr = Fraction(args.heavy)
        heavy = code.heavy_vertices(thr)
        outcome["heavy"] = {str(u): list(code.profile(u)) for u in heavy}
        lines.append(f"  heavy (share > {_fraction_str(thr)}): "
                     + (", ".join(f"{u} profile {code.profile(u)}" for u in heavy) or "none"))
    params = {"n": args.n, "offsets": offsets, "kind": kind.value,
              "code": sorted(set(members)), "k": None, "budget": None,
              "threads": None, "seed": None}
    _emit(_manifest("verify", params, outcome, t0), args.json, lines)
    return EXIT_OK if result.ok else EXIT_INVALID


def cmd_construct(args) -> int:
    t0 = time.perf_counter()
    kind = _parse_kind(args.kind)
    if kind is Kind.DOMINATING:
        raise UsageError("construct supports locating and identifying kinds")
    try:
        if kind is Kind.LOCATING:
            code, size = locating_code_for(args.n), locating_code_size(args.n)
        else:
            code, size = identifying_code_for(args.n), identifying_code_size(args.n)
    except UnsupportedOrder as exc:
        raise UsageError(f"{exc}; use `circodes search` for small orders")
    result = code.verify(kind)
    outcome = {
        "code": sorted(code.members),
        "size": len(code),
        "expected_size": size,
        "verified": result.ok,
        "status": result.status.value,
    }
    lines = [f"C({args.n};1,3) {kind.value} code: {sorted(code.members)}",
             f"size {len(code)}, verification: {result.status.value}"]
    params = {"n": args.n, "offsets": [1, 3], "kind": kind.value, "k": None,
              "budget": None, "threads": None, "seed": None}
    _emit(_manifest("construct", params, outcome, t0), args.json, lines)
    return EXIT_OK if result.ok else EXIT_INVALID


def _progress_printer(enabled: bool):
    if not enabled:
        return None
    def hook(examined: int, elapsed: float) -> None:
        rate = examined / elapsed if elapsed > 0 else 0.0
        print(f"  ... {examined} candidates, {rate:,.0f}/s", file=sys.stderr)
    return hook


def cmd_search(args) -> int:
    t0 = time.perf_counter()
    kind = _parse_kind(args.kind)
    offsets = _parse_ints(args.offsets, "offsets")
    g = CirculantGraph(args.n, offsets)
    progress = _progress_printer(args.progress)
    params = {"n": args.n, "offsets": offsets, "kind": kind.value, "k": args.k,
              "budget": args.budget, "threads": args.threads, "seed": None}
    if args.k is not None:
        code = exists_code_of_size(g, kind, args.k, threads=args.threads,
                                   progress=progress)
        if code is not None:
            outcome = {"exists": True, "size": args.k, "code": sorted(code.members)}
            lines = [f"C({args.n};{args.offsets}) has a {kind.value} code of size "
                     f"{args.k}: {sorted(code.members)}"]
        else:
            outcome = {"exists": False, "size": args.k, "code": None}
            lines = [f"C({args.n};{args.offsets}) has no {kind.value} code of size "
                     f"{args.k} (exhaustive)"]
        _emit(_manifest("search", params, outcome, t0), args.json, lines)
        return EXIT_OK if code is not None else EXIT_INVALID
    try:
        result = min_code_size(g, kind, budget=args.budget, threads=args.threads,
                               progress=progress)
    except BudgetExceeded as exc:
        partial = exc.partial
        outcome = {"optimum": None, "note": str(exc)}
        if partial is not None and partial.outcome is not None \
                and hasattr(partial.outcome, "certificate"):
            outcome["best_known"] = {
                "size": partial.outcome.size,
                "code": sorted(partial.outcome.certificate.members),
            }
        _emit(_manifest("search", params, outcome, t0), args.json,
              [f"budget exceeded: {exc}"])
        return EXIT_BUDGET
    opt = result.outcome
    bounds = lower_bound(args.n, kind, tuple(sorted(offsets)))
    outcome = {
        "optimum": opt.size,
        "code": sorted(opt.certificate.members),
        "lower_bound": bounds.effective,
        "stats": {
            "examined": result.stats.examined,
            "pruned_symmetry": result.stats.pruned_symmetry,
            "pruned_bound": result.stats.pruned_bound,
            "wall_time": round(result.stats.wall_time, 6),
        },
    }
    lines = [f"minimum {kind.value} code of C({args.n};{args.offsets}): size {opt.size}",
             f"certificate: {sorted(opt.certificate.members)}",
             f"examined {result.stats.examined} candidates in "
             f"{result.stats.wall_time:.2f}s"]
    _emit(_manifest("search", params, outcome, t0), args.json, lines)
    return EXIT_OK


def cmd_table(args) -> int:
    t0 = time.perf_counter()
    kind = _parse_kind(args.kind)
    if kind is Kind.DOMINATING:
        raise UsageError("table supports locating and identifying kinds")
    if args.n_from > args.n_to or args.n_from < 7:
        raise UsageError(f"bad range {args.n_from}..{args.n_to}; need 7 <= from <= to")
    budget = resolve_budget(kind, args.budget)
    size_fn = locating_code_size if kind is Kind.LOCATING else identifying_code_size
    code_fn = locating_code_for if kind is Kind.LOCATING else identifying_code_for
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        bounds = lower_bound(n, kind)
        try:
            construction = size_fn(n)
        except UnsupportedOrder:
            construction = None
        optimum = None
        if n <= budget:
            g = CirculantGraph(n)
            result = min_code_size(g, kind, budget=budget, threads=args.threads)
            optimum = result.outcome.size
        match = ""
        if optimum is not None and construction is not None:
            match = "=" if optimum == construction else "<"
        rows.append({"n": n, "lower_bound": bounds.effective,
                     "construction": construction, "optimum": optimum,
                     "match": match})
    params = {"n": None, "offsets": [1, 3], "kind": kind.value, "k": None,
              "budget": budget, "threads": args.threads, "seed": None,
              "range": [args.n_from, args.n_to]}
    if args.csv:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["n", "lower_bound", "construction",
                                                 "optimum", "match"])
        writer.writeheader()
        writer.writerows(rows)
        print(buf.getvalue(), end="")
        return EXIT_OK
    lines = [f"{'n':>4} {'bound':>6} {'constr':>7} {'optimum':>8} match"]
    for r in rows:
        lines.append(f"{r['n']:>4} {r['lower_bound']:>6} "
                     f"{r['construction'] if r['construction'] is not None else '-':>7} "
                     f"{r['optimum'] if r['optimum'] is not None else '-':>8} "
                     f"{r['match']}")
    _emit(_manifest("table", params, {"rows": rows}, t0), args.json, lines)
    return EXIT_OK


def cmd_density(args) -> int:
    t0 = time.perf_counter()
    kind = _parse_kind(args.kind)
    residues = _parse_ints(args.residues, "residues")
    try:
        p = PeriodicCode(args.period, residues)
    except ValueError as exc:
        raise UsageError(str(exc))
    rho = density(p)
    result = verify_periodic(p, kind)
    floor = DENSITY_FLOORS.get(kind)
    outcome = {
        "density": _fraction_str(rho),
        "valid": result.ok,
        "status": result.status.value,
        "witness": list(result.witness) if isinstance(result.witness, tuple)
                   else result.witness,
        "floor": _fraction_str(floor) if floor else None,
        "meets_floor": (rho >= floor) if floor else None,
    }
    rel = "meets" if floor and rho >= floor else "below"
    lines = [f"{p!r}: density {_fraction_str(rho)}, {result.status.value}"
             + (f", {rel} the {_fraction_str(floor)} floor" if floor else "")]
    params = {"n": None, "offsets": [1, 3], "kind": kind.value, "k": None,
              "budget": None, "threads": None, "seed": None,
              "period": args.period, "residues": sorted(set(residues))}
    _emit(_manifest("density", params, outcome, t0), args.json, lines)
    return EXIT_OK if result.ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circodes",
        description="Locating and identifying codes in circulant graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a code against a property")
    p.add_argument("-n", type=int, required=True, help="number of vertices")
    p.add_argument("--offsets", default="1,3", help="comma-separated offsets")
    p.add_argument("--code", required=True,
                   help="comma-separated vertices, or @file with one per line")
    p.add_argument("--kind", required=True,
                   help="dominating, locating, or identifying")
    p.add_argument("--shadows", action="store_true", help="print every shadow")
    p.add_argument("--shares", action="store_true", help="print member shares")
    p.add_argument("--heavy", metavar="THRESH",
                   help="list vertices with share above THRESH (e.g. 3 or 11/4)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="emit the table construction for an order")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--kind", required=True, help="locating or identifying")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exact minimum size, or existence at --k")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--offsets", default="1,3")
    p.add_argument("--kind", required=True)
    p.add_argument("--k", type=int, default=None, help="test one size only")
    p.add_argument("--budget", type=int, default=None,
                   help="largest order searched exhaustively")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--progress", action="store_true",
                   help="report candidate throughput on stderr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="bounds/construction/optimum per order")
    p.add_argument("--kind", required=True)
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("density", help="density and validity of a periodic code")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--residues", required=True, help="comma-separated residues")
    p.add_argument("--kind", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_density)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CircodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
