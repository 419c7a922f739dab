"""Command-line front end: ``monoap {count,density,verify,search}``.

Every command prints a short text report, or a single JSON record with
``--json``. Exit codes: 0 success, 1 failed verification or unfinished
proof, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from .apcount import APFilter, count_mono_cyclic, count_mono_interval, total_increasing_aps
from .constructions import resolve_block
from .core import (
    AFFINE, AFFINE_CONJUGATION, MULTIPLICATIVE, Coloring, GroupKind, format_ratio,
    parse_coloring,
)
from .periodic import density_upper_bound
from .search import (
    Budget, SearchCapExceeded, exhaustive_min_cyclic, min_pattern_count_interval,
    pattern_free_max_interval, zero_mono_colorings,
)
from .suites import DEFAULT_SEED, SUITES, run_suite

SYMMETRIES = {
    "affine-conj": AFFINE_CONJUGATION,
    "affine": AFFINE,
    "mult": MULTIPLICATIVE,
    "none": None,
}


class UsageError(Exception):
    pass


def _record(command: str, inputs: dict, results: dict, exact: Fraction | None,
            exhaustive: bool, started: float) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "exact": None if exact is None else {"num": exact.numerator, "den": exact.denominator},
        "exhaustive": exhaustive,
        "timing": {"seconds": round(time.perf_counter() - started, 6)},
    }


def _coloring_from_args(args) -> Coloring:
    kind = GroupKind(args.group)
    if (args.coloring is None) == (args.file is None):
        raise UsageError("give exactly one of --coloring and --file")
    if args.file is not None:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
        c = parse_coloring(text, kind=kind)
    else:
        spec = args.coloring.strip().lower()
        if spec in ("all-zeros", "all-ones"):
            if args.n is None:
                raise UsageError(f"--coloring {spec} needs --n")
            c = Coloring.constant(args.n, 0 if spec == "all-zeros" else 1, kind)
        else:
            c = resolve_block(args.coloring).as_kind(kind)
    if args.n is not None and c.n != args.n:
        raise UsageError(f"coloring has length {c.n}, but --n is {args.n}")
    return c


def cmd_count(args) -> tuple[dict, int]:
    started = time.perf_counter()
    c = _coloring_from_args(args)
    if args.k < 1:
        raise UsageError("--k must be positive")
    filt = APFilter(args.filter)
    results: dict = {"n": c.n, "k": args.k}
    if c.is_cyclic:
        if filt is APFilter.BY_DIFFERENCE:
            per_d = count_mono_cyclic(c, args.k, filt)
            results["by_difference"] = {str(d): v for d, v in sorted(per_d.items())}
            total = sum(per_d.values())
        else:
            total = count_mono_cyclic(c, args.k, filt)
        denominator = c.n * c.n
    else:
        if filt is APFilter.BY_DIFFERENCE:
            per_d = count_mono_interval(c, args.k, by_difference=True)
            results["by_difference"] = {str(d): v for d, v in sorted(per_d.items())}
            total = sum(per_d.values())
        else:
            total = count_mono_interval(c, args.k)
        denominator = total_increasing_aps(c.n, args.k)
        results["total_aps"] = denominator
    results["count"] = total
    exact = Fraction(total, denominator) if denominator else None
    if exact is not None:
        results["density"] = format_ratio(exact)
    inputs = {"group": args.group, "n": c.n, "k": args.k, "coloring": str(c), "filter": filt.value}
    return _record("count", inputs, results, exact, True, started), 0


def cmd_density(args) -> tuple[dict, int]:
    started = time.perf_counter()
    block = resolve_block(args.block)
    if not 0 <= args.r < block.n:
        raise UsageError(f"--r must satisfy 0 <= r < {block.n}")
    try:
        value = density_upper_bound(block, args.k, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    results = {"b": block.n, "density": format_ratio(value), "decimal": float(value)}
    inputs = {"block": args.block, "k": args.k, "r": args.r}
    return _record("density", inputs, results, value, True, started), 0


def cmd_verify(args) -> tuple[dict, int]:
    started = time.perf_counter()
    checks = run_suite(args.suite, args.seed)
    failed = [c for c in checks if not c.passed]
    results = {
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
        "passed": len(checks) - len(failed),
        "failed": len(failed),
        "status": "PASS" if not failed else "FAIL",
    }
    inputs = {"suite": args.suite, "seed": args.seed}
    return _record("verify", inputs, results, None, True, started), 1 if failed else 0


_BUDGET = re.compile(r"^\s*(\d+(?:\.\d+)?)\s*([smh]?)\s*$")


def parse_budget(text: str | None) -> Budget | None:
    """``"30s"``, ``"5m"``, ``"1h"`` limit wall time; a bare integer limits explored nodes."""
    if text is None:
        return None
    m = _BUDGET.match(text)
    if not m:
        raise UsageError(f"bad budget {text!r}; use e.g. 30s, 5m, 1h or a node count")
    value, unit = m.groups()
    if not unit:
        return Budget(max_nodes=int(float(value)))
    return Budget(max_seconds=float(value) * {"s": 1, "m": 60, "h": 3600}[unit])


def cmd_search(args) -> tuple[dict, int]:
    started = time.perf_counter()
    budget = parse_budget(args.budget)
    sym = SYMMETRIES[args.symmetry]
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    inputs: dict = {"symmetry": args.symmetry, "budget": args.budget}
    try:
        if args.min_zn:
            n, k = args.min_zn
            inputs |= {"min_zn": [n, k], "filter": args.filter, "mode": args.mode}
            rep = exhaustive_min_cyclic(n, k, sym, mode=args.mode, filter=args.filter,
                                        workers=args.workers, checkpoint=args.checkpoint,
                                        resume=args.resume)
            results = rep.to_dict()
            results["orbits"] = len(rep.witnesses)
            return _record("search", inputs, results, Fraction(rep.minimum_count, n * n),
                           rep.exhaustive, started), 0 if rep.exhaustive else 1
        if args.zero_mono:
            n, k = args.zero_mono
            inputs |= {"zero_mono": [n, k]}
            reps = zero_mono_colorings(n, k, sym)
            results = {"n": n, "k": k, "orbits": len(reps), "representatives": [str(c) for c in reps]}
            return _record("search", inputs, results, None, True, started), 0
        if args.pattern_free:
            limit = args.pattern_free
            inputs |= {"pattern_free": limit}
            out = pattern_free_max_interval(n_limit=limit, budget=budget,
                                            checkpoint=args.checkpoint, resume=args.resume)
            free = [n for n, r in out.items() if r.free_coloring_found]
            top = out[limit]
            exhausted = top.budget_exhausted
            results = {
                "max_free_n": max(free) if free else 0,
                "witness": str(out[max(free)].witness) if free else None,
                "limit": limit,
                "limit_outcome": top.outcome,
                "nodes_explored": top.nodes_explored,
            }
            return _record("search", inputs, results, None, not exhausted, started), \
                1 if top.outcome == "Unknown" else 0
        n = args.min_pattern
        inputs |= {"min_pattern": n}
        rep = min_pattern_count_interval(n, budget=budget, checkpoint=args.checkpoint,
                                         resume=args.resume)
        results = rep.to_dict()
        exact = None if rep.min_count is None else Fraction(rep.min_count, total_increasing_aps(n, 5))
        return _record("search", inputs, results, exact, not rep.budget_exhausted, started), \
            1 if rep.budget_exhausted else 0
    except SearchCapExceeded as exc:
        raise UsageError(str(exc)) from None


def _render(record: dict) -> str:
    lines = [f"[{record['command']}] " + ", ".join(f"{k}={v}" for k, v in record["inputs"].items()
                                                 if v is not None)]
    results = record["results"]
    if record["command"] == "verify":
        for c in results["checks"]:
            flag = "PASS" if c["passed"] else "FAIL"
            lines.append(f"{flag}  {c['name']}" + (f"  ({c['detail']})" if c["detail"] else ""))
        lines.append(f"{results['status']}: {results['passed']} passed, {results['failed']} failed")
        return "\n".join(lines)
    for key, value in results.items():
        if key == "exhaustive":
            continue
        if isinstance(value, dict):
            value = ", ".join(f"{k}: {v}" for k, v in value.items())
        elif isinstance(value, list):
            value = ", ".join(map(str, value)) if value else "(none)"
        lines.append(f"{key}: {value}")
    if "min_zn" not in record["inputs"] and "limit_outcome" in results:
        if results["limit_outcome"] == "NoneExists":
            lines.append(f"no F-free coloring of [{results['limit']}]")
    lines.append(f"exhaustive: {record['exhaustive']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoap",
                                     description="Monochromatic arithmetic progressions in 2-colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="print one JSON record")

    p = sub.add_parser("count", help="count monochromatic k-APs of a coloring")
    p.add_argument("--group", choices=[g.value for g in GroupKind], default="zn")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--coloring", help="bit string, built-in name, template chain, all-zeros or all-ones")
    p.add_argument("--file", help="text file holding a coloring")
    p.add_argument("--filter", choices=[f.value for f in APFilter], default="all")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("density", help="limiting density of a periodic construction")
    p.add_argument("--block", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive and branch-and-bound searches")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--min-zn", nargs=2, type=int, metavar=("N", "K"))
    what.add_argument("--zero-mono", nargs=2, type=int, metavar=("N", "K"))
    what.add_argument("--pattern-free", type=int, metavar="MAXN")
    what.add_argument("--min-pattern", type=int, metavar="N")
    p.add_argument("--budget", help="time (30s, 5m, 1h) or node limit")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--symmetry", choices=list(SYMMETRIES), default="affine-conj")
    p.add_argument("--filter", choices=["all", "nondeg"], default="all")
    p.add_argument("--mode", choices=["pruned", "naive"], default="pruned")
    common(p)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        record, code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(record, sort_keys=True) if args.json else _render(record))
    return code


if __name__ == "__main__":
    sys.exit(main())
