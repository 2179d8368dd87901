"""Command-line front end.

Subcommands:
    graph build   construct a named graph family, emit edge-list text
    atn           Alon-Tarsi number of a graph file (poly | orient | both)
    coef          one graph-polynomial coefficient
    orient diff   balanced-subset parity counts of an orientation file
    factorize     1-factorization of a complete or regular bipartite graph
    choosable     k-choosability verdict with witness
    verify        run a claimed-formula suite, emit json | csv | table

Exit status: 0 = ran to completion (suite mismatches and in-band
"budget-exceeded" rows are findings, not failures); 2 = a budget limit
stopped a direct computation; 1 = usage or input error.

The ATNLAB_BUDGET_MS environment variable supplies a default wall-clock
ceiling wherever --budget-ms is accepted.  `verify` runs untimed by
default so that its output is byte-reproducible; pass --timings ms to
record real elapsed times.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .budget import Budget, BudgetExceededError
from .choosability import is_k_choosable
from .factorization import (format_factorization, one_factorize_complete,
                            one_factorize_regular_bipartite)
from .graphs import (FAMILIES, FamilySpec, bipartition, build_family,
                     format_edge_list, parse_edge_list)
from .harness import SUITE_IDS, OracleMismatchError, format_report, run_suite
from .orientations import parse_orientation
from .parity import atn_via_orientations, eulerian_parity_diff
from .polynomials import atn_via_polynomial, coefficient

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here reserves 2 for
    budget exhaustion, so usage problems exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _parse_ints(text: str) -> tuple[int, ...]:
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise ValueError("expected a comma-separated list of integers")
    return tuple(int(p) for p in parts)


def _env_budget_ms() -> float | None:
    raw = os.environ.get("ATNLAB_BUDGET_MS")
    if raw is None or not raw.strip():
        return None
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"ATNLAB_BUDGET_MS must be a number, got {raw!r}")


def _budget_from(args, default_ms: float | None = 60_000.0) -> Budget:
    ms = getattr(args, "budget_ms", None)
    if ms is None:
        ms = _env_budget_ms()
    if ms is None:
        ms = default_ms
    budget = Budget(max_ms=ms)
    terms = getattr(args, "budget_terms", None)
    if terms is not None:
        budget.max_term_ops = terms
    subsets = getattr(args, "budget_subsets", None)
    if subsets is not None:
        budget.max_subsets = subsets
    parity_edges = getattr(args, "budget_parity_edges", None)
    if parity_edges is not None:
        budget.max_parity_edges = parity_edges
    return budget


def _add_budget_flags(p: argparse.ArgumentParser):
    p.add_argument("--budget-terms", type=int, metavar="N",
                   help="cap on term-multiplication events (default 10^7)")
    p.add_argument("--budget-ms", type=float, metavar="MS",
                   help="wall-clock ceiling in milliseconds (default 60000; "
                        "ATNLAB_BUDGET_MS overrides the default)")
    p.add_argument("--budget-subsets", type=int, metavar="N",
                   help="cap on enumerated arc subsets (default 2^26)")
    p.add_argument("--budget-parity-edges", type=int, metavar="N",
                   help="max arcs for direct parity enumeration (default 26)")


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_graph_build(args) -> int:
    fam = FamilySpec(args.family, _parse_ints(args.params))
    _emit(format_edge_list(build_family(fam)), args.output)
    return EXIT_OK


def _cmd_atn(args) -> int:
    g = _read_graph_file(args.graph)
    budget = _budget_from(args)
    if args.method == "both":
        poly_val = atn_via_polynomial(g, budget)
        orient_val = atn_via_orientations(g, budget)
        if poly_val != orient_val:
            raise OracleMismatchError({"graph": args.graph}, poly_val, orient_val)
        print(json.dumps({"atn": poly_val, "methods_agree": True}))
    elif args.method == "poly":
        print(json.dumps({"atn": atn_via_polynomial(g, budget),
                          "method": "poly"}))
    else:
        print(json.dumps({"atn": atn_via_orientations(g, budget),
                          "method": "orient"}))
    return EXIT_OK


def _cmd_coef(args) -> int:
    g = _read_graph_file(args.graph)
    target = _parse_ints(args.target)
    value = coefficient(g, target, _budget_from(args))
    print(json.dumps({"target": list(target), "coefficient": value}))
    return EXIT_OK


def _cmd_orient_diff(args) -> int:
    g = _read_graph_file(args.graph)
    with open(args.orientation, "r", encoding="utf-8") as fh:
        o = parse_orientation(fh.read(), g)
    pd = eulerian_parity_diff(o, _budget_from(args))
    print(json.dumps(pd.to_json()))
    return EXIT_OK


def _cmd_factorize(args) -> int:
    g = _read_graph_file(args.graph)
    if g.n >= 2 and g.m == g.n * (g.n - 1) // 2:
        f = one_factorize_complete(g.n)
    elif bipartition(g) is not None:
        f = one_factorize_regular_bipartite(g)
    else:
        raise ValueError("graph is neither complete nor regular bipartite; "
                         "no 1-factorization method applies")
    _emit(format_factorization(f), args.output)
    return EXIT_OK


def _cmd_choosable(args) -> int:
    g = _read_graph_file(args.graph)
    result = is_k_choosable(g, args.k, _budget_from(args))
    print(json.dumps({"k": args.k, "status": result.status,
                      "witness": result.witness_json()}))
    return EXIT_OK


def _cmd_verify(args) -> int:
    ms = args.budget_ms if args.budget_ms is not None else _env_budget_ms()
    budget_factory = lambda: Budget(max_ms=ms)
    report = run_suite(args.suite, max_size=args.max_size, method=args.method,
                       budget_factory=budget_factory,
                       timings=args.timings == "ms")
    _emit(format_report(report, args.format), args.output)
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="atnlab",
                     description="Exact Alon-Tarsi number laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    p_graph = sub.add_parser("graph", help="graph construction")
    graph_sub = p_graph.add_subparsers(dest="graph_command", required=True)
    p_build = graph_sub.add_parser("build", help="build a named family")
    p_build.add_argument("--family", required=True, choices=FAMILIES)
    p_build.add_argument("--params", required=True,
                         help="comma-separated integers, e.g. 3,3")
    p_build.add_argument("-o", "--output", metavar="FILE")
    p_build.set_defaults(handler=_cmd_graph_build)

    p_atn = sub.add_parser("atn", help="Alon-Tarsi number of a graph file")
    p_atn.add_argument("--graph", required=True, metavar="FILE")
    p_atn.add_argument("--method", choices=("poly", "orient", "both"),
                       default="both")
    _add_budget_flags(p_atn)
    p_atn.set_defaults(handler=_cmd_atn)

    p_coef = sub.add_parser("coef", help="one graph-polynomial coefficient")
    p_coef.add_argument("--graph", required=True, metavar="FILE")
    p_coef.add_argument("--target", required=True,
                        help="comma-separated exponents, one per vertex")
    _add_budget_flags(p_coef)
    p_coef.set_defaults(handler=_cmd_coef)

    p_orient = sub.add_parser("orient", help="orientation analysis")
    orient_sub = p_orient.add_subparsers(dest="orient_command", required=True)
    p_diff = orient_sub.add_parser(
        "diff", help="balanced-subset parity counts of an orientation")
    p_diff.add_argument("--graph", required=True, metavar="FILE")
    p_diff.add_argument("--orientation", required=True, metavar="FILE")
    _add_budget_flags(p_diff)
    p_diff.set_defaults(handler=_cmd_orient_diff)

    p_fact = sub.add_parser("factorize",
                            help="1-factorization of a graph file")
    p_fact.add_argument("--graph", required=True, metavar="FILE")
    p_fact.add_argument("-o", "--output", metavar="FILE")
    p_fact.set_defaults(handler=_cmd_factorize)

    p_choose = sub.add_parser("choosable", help="k-choosability verdict")
    p_choose.add_argument("--graph", required=True, metavar="FILE")
    p_choose.add_argument("--k", required=True, type=int)
    _add_budget_flags(p_choose)
    p_choose.set_defaults(handler=_cmd_choosable)

    p_verify = sub.add_parser("verify", help="run a claimed-formula suite")
    p_verify.add_argument("--suite", required=True, choices=SUITE_IDS)
    p_verify.add_argument("--max-size", type=int, metavar="N",
                          help="largest instance vertex count to attempt")
    p_verify.add_argument("--method", choices=("poly", "orient", "both"),
                          default="both")
    p_verify.add_argument("--format", choices=("json", "csv", "table"),
                          default="json")
    p_verify.add_argument("--timings", choices=("none", "ms"), default="none",
                          help="record elapsed times (default none, for "
                               "byte-reproducible output)")
    p_verify.add_argument("--budget-ms", type=float, metavar="MS",
                          help="per-instance wall-clock ceiling (default: "
                               "untimed, deterministic work limits only)")
    p_verify.add_argument("-o", "--output", metavar="FILE")
    p_verify.set_defaults(handler=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceededError as e:
        payload = {"error": "budget-exceeded", "limit": e.limit_kind,
                   "work": e.stats}
        if e.atn_lower_bound is not None:
            payload["atn_lower_bound"] = e.atn_lower_bound
        print(json.dumps(payload))
        return EXIT_BUDGET
    except OracleMismatchError as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
