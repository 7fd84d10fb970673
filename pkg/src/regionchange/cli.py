"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 failed cross-check or internal
inconsistency.  Crossing and region ids are 1-based in all output; regions
are numbered in incidence-matrix row order (black block first).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from . import gf2, oracle, rcc
from .diagram import Diagram, parse_pd
from .errors import (
    BudgetExceededError,
    CheckFailedError,
    InternalInconsistencyError,
    MalformedError,
    RegionChangeError,
)
from .tait import SignedPlaneGraph, checkerboard, dual, medial_diagram, tait_graph

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


def _bits_to_ids(bits: int) -> List[int]:
    return [i + 1 for i in range(bits.bit_length()) if (bits >> i) & 1]


def _ids_to_bits(ids: List[int], length: int, what: str) -> int:
    bits = 0
    for i in ids:
        if not (1 <= i <= length):
            raise MalformedError(f"unknown {what} {i} (valid: 1..{length})")
        bits |= 1 << (i - 1)
    return bits


def _diagram_report(d: Diagram) -> dict:
    cb = checkerboard(d)
    inc = rcc.incidence_matrix(d, cb)
    rk = gf2.rank(inc.matrix)
    n_rank = d.c - rk + 1
    n_traversal = len(d.components)
    if n_rank != n_traversal:
        raise InternalInconsistencyError(
            f"rank formula gives {n_rank} components, traversal {n_traversal}"
        )
    lk = {}
    for i in range(n_traversal):
        for j in range(i + 1, n_traversal):
            lk[f"{i + 1},{j + 1}"] = d.linking_number(i, j)
    return {
        "crossings": d.c,
        "regions": d.c + 2,
        "black_regions": cb.n_black,
        "white_regions": cb.n_white,
        "components_traversal": n_traversal,
        "components_rank": n_rank,
        "rank": rk,
        "nullspace_dimension": d.c - rk,
        "linking_numbers": lk,
    }


def _print_info(report: dict):
    print(f"crossings:        {report['crossings']}")
    print(
        f"regions:          {report['regions']} "
        f"({report['black_regions']} black, {report['white_regions']} white)"
    )
    print(
        f"components:       {report['components_traversal']} "
        f"(traversal) = {report['components_rank']} (rank formula)"
    )
    print(f"incidence rank:   {report['rank']}")
    print(f"nullspace dim:    {report['nullspace_dimension']}")
    if report["linking_numbers"]:
        print("linking numbers:")
        for pair, v in report["linking_numbers"].items():
            print(f"  lk({pair}) = {v}")


def cmd_info(args) -> int:
    d = _load_pd(args.pdfile)
    report = _diagram_report(d)
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        _print_info(report)
    return EXIT_OK


def cmd_solve(args) -> int:
    d = _load_pd(args.pdfile)
    target = _ids_to_bits(args.crossings, d.c, "crossing")
    inc = rcc.incidence_matrix(d)
    witness = rcc.solve_regions(d, target, inc)
    report = {"target": _bits_to_ids(target)}
    if witness is None:
        masks = rcc.inter_component_masks(d)
        violated = [
            i + 1
            for i, m in enumerate(masks)
            if gf2.parity(target & m)
        ]
        report["achievable"] = False
        report["parity_violations"] = violated
        if args.json:
            print(json.dumps(report, sort_keys=True))
        else:
            print("unachievable")
            print(
                "odd number of targeted crossings between component(s) "
                f"{violated} and the rest"
            )
    else:
        if inc.matrix.vec_mat(witness) != target:
            raise InternalInconsistencyError("witness does not realize the target")
        report["achievable"] = True
        report["regions"] = _bits_to_ids(witness)
        if args.json:
            print(json.dumps(report, sort_keys=True))
        else:
            print("achievable")
            print("regions: " + " ".join(f"R{i}" for i in report["regions"]))
    return EXIT_OK


def cmd_unknot(args) -> int:
    d = _load_pd(args.pdfile)
    n = len(d.components)
    feasible = rcc.unknottable_by_rcc(d)
    report = {"components": n, "feasible": feasible}
    lk = {
        f"{i + 1},{j + 1}": d.linking_number(i, j)
        for i in range(n)
        for j in range(i + 1, n)
    }
    report["linking_numbers"] = lk
    if n >= 3:
        report["criterion"] = "derived: per-component linking parity"
    elif n == 2:
        report["criterion"] = "linking number parity"
    else:
        report["criterion"] = "knot diagram"
    if feasible:
        plan = rcc.unknot_plan(d)
        if plan is None:
            raise InternalInconsistencyError("feasible verdict without a plan")
        inc = rcc.incidence_matrix(d)
        if inc.matrix.vec_mat(plan) != rcc.descending_target(d):
            raise InternalInconsistencyError("plan does not realize its target")
        after = rcc.apply_rcc(d, plan, inc)
        descending = rcc.is_descending(after)
        if not descending:
            raise InternalInconsistencyError("applied plan is not descending")
        report["plan_regions"] = _bits_to_ids(plan)
        report["descending_after"] = descending
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        if feasible:
            print(f"feasible ({report['criterion']})")
            ids = report["plan_regions"]
            print(
                "plan: "
                + (" ".join(f"R{i}" for i in ids) if ids else "(no changes needed)")
            )
            print("post-check: descending after applying the plan")
        else:
            odd = [p for p, v in lk.items() if v % 2]
            print(f"infeasible ({report['criterion']})")
            print(f"odd linking numbers: {odd}")
    return EXIT_OK


def _dot(g: SignedPlaneGraph, name: str) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n_vertices):
        lines.append(f"  v{v + 1};")
    for e, (u, v) in enumerate(g.edges):
        sign = "+" if g.signs[e] > 0 else "-"
        lines.append(f'  v{u + 1} -- v{v + 1} [label="P{e + 1} ({sign})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> int:
    try:
        text = open(args.graphfile).read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    g = SignedPlaneGraph.parse(text)
    d = medial_diagram(g)
    report = _diagram_report(d)
    report["knot"] = rcc.is_knot_graph(g)
    report["even_degrees"] = rcc.even_degree_test(g)
    if report["even_degrees"] and report["knot"]:
        raise InternalInconsistencyError(
            "even-degree graph classified as a knot diagram"
        )
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        _print_info(report)
        print(f"knot diagram:     {'yes' if report['knot'] else 'no'}")
        print(f"all degrees even: {'yes' if report['even_degrees'] else 'no'}")
    if args.dot:
        with open(args.dot + ".g.dot", "w") as fh:
            fh.write(_dot(g, "G"))
        with open(args.dot + ".gdual.dot", "w") as fh:
            fh.write(_dot(dual(g), "Gdual"))
    return EXIT_OK


def cmd_check(args) -> int:
    rng = random.Random(args.seed)
    out = sys.stdout if args.report is None else open(args.report, "w")
    failures = 0
    try:
        for trial in range(args.trials):
            size = rng.randint(1, args.max_crossings)
            d = oracle.random_diagram(rng, size)
            line = {"trial": trial, "seed": args.seed, "c": d.c}
            try:
                report = oracle.cross_check(d)
                line.update(report)
                line["pass"] = True
            except BudgetExceededError:
                line["skipped"] = "budget"
            except CheckFailedError as exc:
                failures += 1
                line["pass"] = False
                line["error"] = str(exc)
                line["pd"] = exc.instance
            print(json.dumps(line, sort_keys=True), file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    if failures:
        print(f"{failures} trial(s) failed", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _load_pd(path: str) -> Diagram:
    with open(path) as fh:
        return parse_pd(fh.read())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regionchange",
        description="Region crossing change calculus on link diagrams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="diagram summary: regions, rank, components, lk")
    p.add_argument("pdfile")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("solve", help="find regions realizing given crossing changes")
    p.add_argument("pdfile")
    p.add_argument("crossings", nargs="+", type=int, help="1-based crossing ids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("unknot", help="unknotting feasibility and region plan")
    p.add_argument("pdfile")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_unknot)

    p = sub.add_parser("graph", help="analyze a signed plane graph via its medial")
    p.add_argument("graphfile")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PREFIX", help="write PREFIX.g.dot and PREFIX.gdual.dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("check", help="randomized cross-check suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-crossings", type=int, default=12)
    p.add_argument("--report", help="write JSONL here instead of stdout")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InternalInconsistencyError, CheckFailedError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except RegionChangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
