"""Command-line front door: graph I/O, checks, construction, search, bounds.

Exit codes: 0 on success, 1 when a validation or size guard fails, 2 on
usage errors.  Output is deterministic for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import bounds, graphs, knt, labeling as lb, search
from .errors import RadioLabelError, TooLargeError

TABLE = "table"
JSON = "json"


def _size_cap() -> int:
    env = os.environ.get(graphs.SIZE_CAP_ENV)
    return int(env) if env else graphs.DEFAULT_SIZE_CAP


def _read_graph(path: str) -> graphs.Graph:
    if path == "-":
        return graphs.parse_edge_list(sys.stdin.read())
    return graphs.read_edge_list(path)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=(TABLE, JSON), default=TABLE,
                        help="output style (default: table)")


def _threads_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker threads; the search currently runs on "
                             "one thread and output is identical for any N")


def _result_text(result: search.SearchResult, fmt: str) -> str:
    if fmt == JSON:
        return json.dumps(result.to_dict(), indent=2) + "\n"
    rows = [("status", result.status),
            ("span", result.span),
            ("ordering", " ".join(map(str, result.ordering))
             if result.ordering else None),
            ("labels", " ".join(map(str, result.labeling.labels))
             if result.labeling else None),
            ("orderings_examined", result.orderings_examined)]
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k:<{width}}  {'-' if v is None else v}\n"
                   for k, v in rows)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_builtin(args) -> int:
    builder = graphs.BUILDERS[args.name]
    graph = builder() if args.name == "petersen" else builder(args.n)
    _emit(graphs.format_edge_list(graph), args.out)
    return 0


def _cmd_product(args) -> int:
    g = _read_graph(args.graph_a)
    h = _read_graph(args.graph_b)
    product = graphs.cartesian_product(g, h, size_cap=_size_cap())
    _emit(graphs.format_edge_list(product), args.out)
    return 0


def _cmd_power(args) -> int:
    g = _read_graph(args.graph)
    power = graphs.cartesian_power(g, args.t, size_cap=_size_cap())
    _emit(graphs.format_edge_list(power), args.out)
    return 0


def _cmd_order_knt(args) -> int:
    order = knt.knt_ordering(args.n, args.t, method=args.method,
                             size_cap=_size_cap())
    payload = {"n": args.n, "t": args.t, "method": args.method}
    if args.flat:
        payload["order"] = knt.flat_indices(order, args.n)
    else:
        payload["order"] = [list(coords) for coords in order]
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_induce(args) -> int:
    graph = _read_graph(args.graph)
    order = lb.ordering_from_json(_read_text(args.ordering), graph)
    result = lb.induced_labeling(graph, order)
    # the window criterion is equivalent to is_consecutive on the induced
    # labeling and stays linear-ish on large products
    consecutive = lb.check_consecutive_ordering(graph, order)
    if args.format == JSON:
        payload = {
            "graph": args.graph,
            "labels": list(result.labels),
            "span": result.span,
            "consecutive": consecutive,
        }
        _emit(json.dumps(payload, indent=2) + "\n", None)
    else:
        _emit(f"span {result.span}\n"
              f"consecutive: {str(consecutive).lower()}\n", None)
    if args.out:
        _emit(lb.labeling_to_json(result, graph_file=args.graph), args.out)
    return 0


def _cmd_verify(args) -> int:
    graph = _read_graph(args.graph)
    lab = lb.labeling_from_json(_read_text(args.labeling))
    k = args.k if args.k is not None else max(graph.diameter(), 1)
    violations = lb.check_k_radio(graph, lab, k,
                                  fail_fast=not args.all_violations)
    if args.format == JSON:
        payload = {
            "k": k,
            "valid": not violations,
            "violations": [
                {"u": w.u, "v": w.v, "required_gap": w.required_gap,
                 "actual_gap": w.actual_gap} for w in violations],
        }
        _emit(json.dumps(payload, indent=2) + "\n", None)
    elif violations:
        lines = [f"invalid for k={k}: {len(violations)} violation(s)"
                 + ("" if args.all_violations else " (first shown)")]
        lines += [f"  ({w.u}, {w.v}) gap {w.actual_gap} < required "
                  f"{w.required_gap}" for w in violations]
        _emit("\n".join(lines) + "\n", None)
    else:
        _emit(f"valid for k={k}, span {lab.span}\n", None)
    return 1 if violations else 0


def _cmd_radio_number(args) -> int:
    graph = _read_graph(args.graph)
    try:
        result = search.exact_radio_number(
            graph, limit=args.limit, prune=not args.no_prune,
            symmetry_reduction=args.symmetry_reduction)
    except TooLargeError as exc:
        print(f"error: {exc}; try search-consecutive for a "
              f"consecutive-labeling witness", file=sys.stderr)
        return 1
    _emit(_result_text(result, args.format), None)
    return 0


def _cmd_search_consecutive(args) -> int:
    graph = _read_graph(args.graph)
    result = search.find_consecutive_ordering(graph, time_budget=args.budget)
    _emit(_result_text(result, args.format), None)
    return 0


def _cmd_threshold(args) -> int:
    ts = args.t or []
    if args.graph:
        report = bounds.threshold_report(_read_graph(args.graph), ts)
    else:
        report = bounds.threshold_report_params(args.n, args.diam, ts)
    if args.format == JSON:
        _emit(json.dumps(report.to_dict(), indent=2) + "\n", None)
        return 0
    lines = [f"n {report.n}  diam {report.diam}  s {report.s}"
             + (f"  closed-form {report.closed_form_s}"
                if report.closed_form_s is not None else "")]
    if report.verdicts:
        lines.append("t  verdict")
        lines += [f"{t}  {v}" for t, v in report.verdicts]
    _emit("\n".join(lines) + "\n", None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radiolabel",
        description="Radio labelings of graphs: checks, consecutive "
                    "orderings of powers of complete graphs, exhaustive "
                    "search, and impossibility thresholds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("builtin", help="emit a named graph as an edge list")
    p.add_argument("name", choices=sorted(graphs.BUILDERS))
    p.add_argument("--n", type=int, default=3, help="size parameter")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(handler=_cmd_builtin)

    p = sub.add_parser("product", help="Cartesian product of two graphs")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_product)

    p = sub.add_parser("power", help="Cartesian power of a graph")
    p.add_argument("graph")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_power)

    p = sub.add_parser("order-knt",
                       help="consecutive-labeling ordering of K_n^t")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=("matrix", "recursive"),
                   default="matrix")
    p.add_argument("--flat", action="store_true",
                   help="emit flat vertex indices instead of tuples")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_order_knt)

    p = sub.add_parser("induce", help="labeling induced by an ordering")
    p.add_argument("graph")
    p.add_argument("ordering", nargs="?", default="-",
                   help="ordering JSON (default stdin)")
    p.add_argument("--out", help="write the labeling JSON here")
    _format_flag(p)
    p.set_defaults(handler=_cmd_induce)

    p = sub.add_parser("verify", help="check a labeling file")
    p.add_argument("graph")
    p.add_argument("labeling", nargs="?", default="-",
                   help="labeling JSON (default stdin)")
    p.add_argument("--k", type=int, help="level k (default: diameter)")
    p.add_argument("--all-violations", action="store_true",
                   help="report every violating pair, not just the first")
    _format_flag(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("radio-number", help="exact radio number (small |V|)")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=search.DEFAULT_EXACT_LIMIT)
    p.add_argument("--no-prune", action="store_true",
                   help="plain enumeration of all orderings")
    p.add_argument("--symmetry-reduction", action="store_true",
                   help="start only from one vertex per automorphism class "
                        "(same optimum, possibly a different witness)")
    _format_flag(p)
    _threads_flag(p)
    p.set_defaults(handler=_cmd_radio_number)

    p = sub.add_parser("search-consecutive",
                       help="backtracking search for a consecutive witness")
    p.add_argument("graph")
    p.add_argument("--budget", type=float,
                   default=search.DEFAULT_TIME_BUDGET,
                   help="time budget in seconds")
    _format_flag(p)
    _threads_flag(p)
    p.set_defaults(handler=_cmd_search_consecutive)

    p = sub.add_parser("threshold",
                       help="impossibility threshold s and power verdicts")
    p.add_argument("--graph", help="base graph file (diameter is computed)")
    p.add_argument("--n", type=int, help="base vertex count")
    p.add_argument("--diam", type=int, help="base diameter")
    p.add_argument("--t", type=int, action="append",
                   help="power to classify (repeatable)")
    _format_flag(p)
    p.set_defaults(handler=_cmd_threshold)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "threshold":
        if bool(args.graph) == (args.n is not None or args.diam is not None):
            parser.error("give either --graph or both --n and --diam")
        if not args.graph and (args.n is None or args.diam is None):
            parser.error("give either --graph or both --n and --diam")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.handler(args)
    except RadioLabelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
