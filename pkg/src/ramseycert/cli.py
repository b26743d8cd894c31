"""Command-line interface.  Every command prints one JSON report.

Exit status: 0 witness found / verified, 1 exhausted / counterexample,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from importlib import resources
from typing import Optional

from .errors import ContractViolation, RamseyCertError, RangeError
from .extractor import Config, Trace, extract_witness, proven_m0, ramsey_bound_target
from .graph import ColoredComplete, Graph, TargetGraph, is_connected
from .graph6 import emit_graph6, parse_graph6
from .matchingcase import lower_bound_coloring, matching_witness
from .oracle import (
    brute_force_witness,
    check_witness,
    coloring_index,
    exhaustive_verify,
    ramsey_number_exact,
)
from .pathramsey import bound_chi, bound_sqrt, ceil_sqrt
from .witness import BlueCopy, Exhausted, RedCycle

NAMED = re.compile(r"^(\d*)([KCPS])(\d+)(?:,(\d+))?$")


def load_schema() -> dict:
    text = resources.files("ramseycert").joinpath("report_schema.json").read_text()
    return json.loads(text)


def _named_graph(token: str) -> Graph:
    match = NAMED.match(token)
    if not match:
        raise ValueError(token)
    count, kind, a, b = match.groups()
    a = int(a)
    if kind == "K" and b is not None:
        g = Graph.complete_multipartite([a, int(b)])
    elif b is not None:
        raise ValueError(token)
    elif kind == "K":
        g = Graph.complete(a)
    elif kind == "C":
        g = Graph.cycle(a)
    elif kind == "P":
        g = Graph.path(a)
    else:
        g = Graph.star(a)
    out = Graph.empty(0)
    for _ in range(int(count) if count else 1):
        out = out.disjoint_union(g)
    return out


def parse_target(text: str) -> Graph:
    """Target graph from a name (``3K2``, ``C5``, ``K2,3``, ``S4``, ``P3+K2``),
    an edge list (``0-1,1-2``), or a graph6 string."""
    text = text.strip()
    if "-" in text:
        edges = []
        for item in text.split(","):
            a, b = item.split("-")
            edges.append((int(a), int(b)))
        return Graph.from_edges(max(max(e) for e in edges) + 1, edges)
    try:
        out = Graph.empty(0)
        for token in text.split("+"):
            out = out.disjoint_union(_named_graph(token))
        return out
    except ValueError:
        return parse_graph6(text)


def read_coloring(path: str) -> ColoredComplete:
    """First line: the order ``N``; second line: the red graph in graph6."""
    with open(path, encoding="ascii") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if not lines:
        raise ValueError(f"{path}: empty colouring file")
    n = int(lines[0])
    red = parse_graph6(lines[1]) if len(lines) > 1 else Graph.empty(0)
    if red.order != n:
        raise ValueError(f"{path}: header says N={n} but the red graph has {red.order} vertices")
    return ColoredComplete(red)


def format_coloring(coloring: ColoredComplete) -> str:
    return f"{coloring.order}\n{emit_graph6(coloring.red)}\n"


def coloring_json(coloring: ColoredComplete) -> dict:
    return {"order": coloring.order, "red_graph6": emit_graph6(coloring.red)}


def _int_root_floor(x: int, r: int) -> int:
    lo, hi = 0, 1
    while hi**r <= x:
        hi *= 2
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**r <= x:
            lo = mid
        else:
            hi = mid
    return lo


def clique_cycle_bound(k: int, n: int) -> int:
    """``floor(3k * n^((k+1)/(k-1)))``, exactly."""
    return _int_root_floor((3 * k) ** (k - 1) * n ** (k + 1), k - 1)


def bounds_report(k: int, h: TargetGraph, B: int) -> dict:
    out: dict = {"n": h.n, "m": h.m, "chi": h.chi}
    out["path_chromatic_bound"] = bound_chi(k, h.n, h.chi)
    out["path_sqrt_bound"] = bound_sqrt(k, h.n, h.m)
    if k >= 3 and k % 2 == 1 and h.n >= 2:
        out["clique_cycle_bound"] = clique_cycle_bound(k, h.n)
        # connected, average degree <= 2(1 + (8k)^-2), n >= (10k)^4
        out["sparse_connected_applicable"] = (
            is_connected(h.graph)
            and h.m * 64 * k * k <= h.n * (64 * k * k + 1)
            and h.n >= (10 * k) ** 4
        )
        out["sparse_connected_value"] = 2 * h.n - 1
        out["conjectured_bound"] = 2 * h.m + (k - 1) // 2
    if k >= 5 and k % 2 == 1:
        cfg = Config(k=k, B=B)
        out["cycle_target_bound"] = ramsey_bound_target(cfg, h.m)
        out["cycle_target_B"] = B
        out["proven_m0"] = proven_m0(k)
        out["sqrt_m_ceil"] = ceil_sqrt(h.m)
    return out


def _witness_json(w) -> Optional[dict]:
    return w.to_json() if isinstance(w, (RedCycle, BlueCopy)) else None


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramseycert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="red C_k or blue H in a colouring")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--m0", type=int, default=0)
    p.add_argument("--B", type=int, default=0)
    p.add_argument("--fallback-limit", type=int, default=10)
    p.add_argument("--guard-budget", type=int, default=16)
    p.add_argument("--no-density-guards", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("matching-case", help="red C_k or blue mK_2")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--coloring")
    src.add_argument("--lower-bound", action="store_true")

    p = sub.add_parser("verify", help="exhaustively check R(C_k, H) <= order")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("bounds", help="numeric upper bounds for R(P_k, H) and R(C_k, H)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--B", type=int, default=0)

    p = sub.add_parser("ramsey-number", help="exact R(C_k, H) by exhaustive search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--min-order", type=int, default=1)
    p.add_argument("--jobs", type=int, default=None)
    return parser


def _run(args: argparse.Namespace) -> tuple[int, dict]:
    inputs = {k: v for k, v in vars(args).items() if k != "command"}
    report: dict = {"command": args.command, "inputs": inputs, "validated": True}
    status = 0

    if args.command == "extract":
        h = TargetGraph(parse_target(args.target))
        coloring = read_coloring(args.coloring)
        cfg = Config(
            k=args.k,
            m0=args.m0,
            B=args.B,
            fallback_limit=args.fallback_limit,
            guard_budget=args.guard_budget,
            density_guards=not args.no_density_guards,
            seed=args.seed,
        )
        trace = Trace()
        w = extract_witness(coloring, cfg, h, trace)
        report["stage"] = trace.result_stage
        if isinstance(w, Exhausted):
            report["exhausted"] = w.to_json()
            report["validated"] = False
            status = 1
        else:
            report["witness"] = _witness_json(w)
            report["validated"] = check_witness(coloring, args.k, h, w)
            status = 0 if report["validated"] else 1

    elif args.command == "matching-case":
        h = Graph.matching(args.m)
        if args.lower_bound:
            coloring = lower_bound_coloring(args.k, args.m)
            report["coloring"] = coloring_json(coloring)
            found = brute_force_witness(coloring, args.k, h, max_order=None)
            report["result"] = {"witness_exists": found is not None}
            if found is None:
                report["message"] = "no witness exists"
                status = 1
            else:
                report["witness"] = _witness_json(found)
                report["validated"] = check_witness(coloring, args.k, h, found)
        else:
            coloring = read_coloring(args.coloring)
            w = matching_witness(coloring, args.k, args.m)
            report["witness"] = _witness_json(w)
            report["validated"] = check_witness(coloring, args.k, h, w)
            status = 0 if report["validated"] else 1

    elif args.command == "verify":
        h = TargetGraph(parse_target(args.target))
        result = exhaustive_verify(args.k, h, args.order, jobs=args.jobs)
        report["result"] = {"verified": result.verified, "colourings": result.colourings}
        if not result.verified:
            assert result.counterexample is not None
            report["coloring"] = coloring_json(result.counterexample)
            report["result"]["counterexample_index"] = result.counterexample_index
            report["validated"] = (
                brute_force_witness(result.counterexample, args.k, h, max_order=None) is None
            )
            status = 1

    elif args.command == "bounds":
        h = TargetGraph(parse_target(args.target))
        report["result"] = bounds_report(args.k, h, args.B)

    elif args.command == "ramsey-number":
        h = TargetGraph(parse_target(args.target))
        try:
            found = ramsey_number_exact(args.k, h, args.max_order, args.min_order, jobs=args.jobs)
        except RangeError as exc:
            report["result"] = {"value": None, "message": str(exc)}
            report["validated"] = False
            status = 1
        else:
            report["result"] = {
                "value": found.value,
                "counterexample_index": coloring_index(found.counterexample),
            }
            report["coloring"] = coloring_json(found.counterexample)
            report["validated"] = (
                brute_force_witness(found.counterexample, args.k, h, max_order=None) is None
            )
    return status, report


def run_command(argv: list[str]) -> tuple[int, Optional[dict]]:
    """Run one command; returns the exit status and the report (``None`` on a
    usage or input error, after printing a diagnostic to stderr)."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), None
    start = time.perf_counter()
    try:
        status, report = _run(args)
    except ContractViolation:
        raise
    except (OSError, ValueError, RamseyCertError) as exc:
        print(f"ramseycert: error: {exc}", file=sys.stderr)
        return 2, None
    report["timings"] = {"total_seconds": round(time.perf_counter() - start, 6)}
    return status, report


def main(argv: Optional[list[str]] = None) -> int:
    status, report = run_command(sys.argv[1:] if argv is None else argv)
    if report is not None:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
