"""Command-line interface.

Results go to stdout, diagnostics to stderr; identical invocations produce
byte-identical output. Exit codes: 0 success, 2 invalid input, 3 census cap
exceeded. The env var JACO_CAP_EPS overrides the default census cap; an
explicit --cap-eps flag overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .brushes import brush_number, minimal_allocation
from .census import DEFAULT_CAP_EPS, brute_force_brush_number, census
from .cleaning import allocation_from_json, simulate
from .digraph import DiGraph, underlying_edges
from .errors import CapExceededError
from .experiments import hope_bound_experiment, linking_experiment, table1
from .jaco import build_jaco
from .render import csv_table, markdown_table
from .serial import load_graph_json

FORMATS = ("md", "csv", "json")


def _default_cap() -> int:
    return int(os.environ.get("JACO_CAP_EPS", DEFAULT_CAP_EPS))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str) -> int:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


def _load_input_graph(args) -> DiGraph:
    if getattr(args, "graph", None):
        return load_graph_json(_read_text(args.graph))
    if getattr(args, "n", None) is not None:
        return build_jaco(args.n).to_digraph()
    raise ValueError("either --n or --graph is required")


def _cmd_graph(args) -> int:
    g = build_jaco(args.n)
    if args.format == "json":
        return _emit(g.to_json())
    rows = [[t, h] for t, h in g.arcs]
    if args.format == "csv":
        return _emit(csv_table(["tail", "head"], rows))
    return _emit(f"n: {g.n}\n\n" + markdown_table(["tail", "head"], rows))


def _cmd_br(args) -> int:
    report = brush_number(build_jaco(args.n))
    if args.format == "json":
        return _emit(report.to_json())
    alloc = " ".join(str(b) for b in report.allocation)
    pairs = [
        ["n", report.n],
        ["prime_index", report.prime_index],
        ["sum_prefix", report.sum_prefix],
        ["sum_hope", report.sum_hope],
        ["br", report.br],
        ["allocation", alloc],
    ]
    if args.format == "csv":
        return _emit(csv_table([p[0] for p in pairs], [[p[1] for p in pairs]]))
    return _emit(markdown_table(["field", "value"], pairs))


def _cmd_allocation(args) -> int:
    alloc = brush_number(build_jaco(args.n)).allocation
    if args.format == "json":
        return _emit(alloc.to_json())
    rows = [[v, b] for v, b in enumerate(alloc, start=1)]
    if args.format == "csv":
        return _emit(csv_table(["vertex", "brushes"], rows))
    return _emit(markdown_table(["vertex", "brushes"], rows))


def _cmd_simulate(args) -> int:
    g = _load_input_graph(args)
    if args.allocation:
        alloc = allocation_from_json(_read_text(args.allocation))
    else:
        alloc = minimal_allocation(g)
    trace = simulate(g, alloc)
    if args.format == "json":
        return _emit(trace.to_json())
    rows = [
        [k, s.vertex, s.held, " ".join(f"{t}->{h}" for t, h in s.cleaned)]
        for k, s in enumerate(trace.steps, start=1)
    ]
    headers = ["step", "vertex", "held", "cleaned"]
    if args.format == "csv":
        rows.append(["outcome", trace.outcome, "", ""])
        return _emit(csv_table(headers, rows))
    text = f"outcome: {trace.outcome}\n\n" + markdown_table(headers, rows)
    if trace.remaining_dirty:
        dirty = " ".join(f"{t}->{h}" for t, h in trace.remaining_dirty)
        text += f"\nremaining_dirty: {dirty}\n"
    return _emit(text)


def _cmd_census(args) -> int:
    c = census(_load_input_graph(args), cap_eps=args.cap_eps)
    if args.format == "json":
        return _emit(c.to_json())
    if args.format == "csv":
        return _emit(c.to_csv())
    headers = ["mask"] + [f"e_{k + 1}" for k in range(c.eps)] + ["cost"]
    rows = []
    for mask, cost in enumerate(c.costs):
        arcs = c.orientation(mask).arcs
        rows.append(
            [mask]
            + [f"{t}->{h}" for t, h in arcs]
            + ["undoable" if cost < 0 else cost]
        )
    text = markdown_table(headers, rows)
    text += f"\nminimum: {c.minimum}\nundoable_count: {c.undoable_count}\n"
    return _emit(text)


def _cmd_oracle(args) -> int:
    g = _load_input_graph(args)
    br = brute_force_brush_number(g, cap_eps=args.cap_eps)
    eps = len(underlying_edges(g))
    label = "n" if args.graph is None else "nu"
    value = args.n if args.graph is None else g.nu
    if args.format == "json":
        return _emit(json.dumps({label: value, "eps": eps, "br": br}))
    if args.format == "csv":
        return _emit(csv_table([label, "eps", "br"], [[value, eps, br]]))
    return _emit(f"{label}: {value}\neps: {eps}\nbr: {br}\n")


_TABLE_HEADERS = ["i", "d^-(v_i)", "d^+(v_i)", "v_j^*", "b_r(J_i(1))"]


def _cmd_table(args) -> int:
    rows = table1(args.max_n)
    if args.format == "json":
        return _emit(
            json.dumps(
                [
                    {
                        "i": r.i,
                        "d_minus": r.d_minus,
                        "d_plus_inf": r.d_plus_inf,
                        "prime_vertex": r.prime_vertex,
                        "br": r.br,
                    }
                    for r in rows
                ]
            )
        )
    if args.format == "csv":
        data = [[r.i, r.d_minus, r.d_plus_inf, r.prime_vertex, r.br] for r in rows]
        return _emit(csv_table(_TABLE_HEADERS, data))
    data = [
        [r.i, r.d_minus, r.d_plus_inf, f"v_{r.prime_vertex}", r.br] for r in rows
    ]
    return _emit(markdown_table(_TABLE_HEADERS, data))


def _cmd_experiment(args) -> int:
    if args.which == "hope":
        rows = hope_bound_experiment(args.max_n)
        headers = [
            "n", "prime_index", "br_jaco", "hope_size", "br_hope",
            "bound_holds", "linking_edges",
        ]
        data = [
            [
                r.n, r.prime_index, r.br_jaco, r.hope_size, r.br_hope,
                "true" if r.bound_holds else "false", r.linking_edges,
            ]
            for r in rows
        ]
        blobs = [
            {
                "n": r.n,
                "prime_index": r.prime_index,
                "br_jaco": r.br_jaco,
                "hope_size": r.hope_size,
                "br_hope": r.br_hope,
                "bound_holds": r.bound_holds,
                "linking_edges": r.linking_edges,
            }
            for r in rows
        ]
    else:
        rows = linking_experiment(args.max_n)
        headers = [
            "n", "prime_index", "eps_total", "eps_prefix", "eps_hope",
            "linking_edges",
        ]
        data = [
            [r.n, r.prime_index, r.eps_total, r.eps_prefix, r.eps_hope,
             r.linking_edges]
            for r in rows
        ]
        blobs = [
            {
                "n": r.n,
                "prime_index": r.prime_index,
                "eps_total": r.eps_total,
                "eps_prefix": r.eps_prefix,
                "eps_hope": r.eps_hope,
                "linking_edges": r.linking_edges,
            }
            for r in rows
        ]
    if args.format == "json":
        return _emit(json.dumps(blobs))
    if args.format == "csv":
        return _emit(csv_table(headers, data))
    return _emit(markdown_table(headers, data))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobrush",
        description="Jaco graph brush numbers: construction, simulation, census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="md")

    p = sub.add_parser("graph", help="emit the Jaco graph on n vertices")
    p.add_argument("--n", type=_positive_int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("br", help="brush number of the Jaco graph on n vertices")
    p.add_argument("--n", type=_positive_int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_br)

    p = sub.add_parser("allocation", help="minimal brush allocation for the Jaco graph")
    p.add_argument("--n", type=_positive_int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_allocation)

    p = sub.add_parser("simulate", help="run the cleaning process")
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--graph", help="graph JSON path, or - for stdin")
    p.add_argument("--allocation", help="allocation JSON path (default: derived minimal)")
    add_format(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("census", help="cost every orientation of the underlying graph")
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--graph", help="graph JSON path, or - for stdin")
    p.add_argument("--cap-eps", type=_positive_int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("oracle", help="brute-force brush number of the underlying graph")
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--graph", help="graph JSON path, or - for stdin")
    p.add_argument("--cap-eps", type=_positive_int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("table", help="degree and brush-number table")
    p.add_argument("--max-n", type=_positive_int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("experiment", help="data-generating experiments")
    p.add_argument("which", choices=("hope", "linking"))
    p.add_argument("--max-n", type=_positive_int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported on stderr
        return int(exc.code or 0)
    if hasattr(args, "cap_eps") and args.cap_eps is None:
        try:
            args.cap_eps = _default_cap()
        except ValueError:
            print("error: JACO_CAP_EPS must be an integer", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
