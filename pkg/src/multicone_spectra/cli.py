"""Command-line front end.

Each subcommand resolves its graph source, calls one library function and
renders the result. Exit status: 0 on success, 1 on a domain error (bad
expression, capacity, precondition), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import expr as ex
from .ds import CensusReport, DSReport, cospectral_census, verify_ds
from .errors import SpectraError
from .graph import Graph, degree_profile, multicone, to_dot
from .graph6 import decode_graph6, encode_graph6
from .poly import IntPoly
from .quadirr import Spectrum
from .spectra import DEFAULT_TOL, KINDS, describe_spectrum
from .theorems import SweepResult, probe, sweep

FORMATS = ("table", "json", "dot")


class UsageError(Exception):
    """A request that is well-typed but not meaningful (exit status 2)."""


@dataclass
class GraphSource:
    graph: Graph
    label: str
    family: tuple[int, int, int] | None = None


def _family(text: str) -> tuple[int, int, int]:
    try:
        r, s, t = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected r,s,t, got {text!r}") from None
    if min(r, s, t) < 1:
        raise argparse.ArgumentTypeError("r, s and t must be at least 1")
    return r, s, t


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def resolve_source(args: argparse.Namespace) -> GraphSource:
    if args.family is not None:
        r, s, t = args.family
        return GraphSource(multicone(r, s, t), f"M({r},{s},{t})", (r, s, t))
    if args.graph6 is not None:
        text = sys.stdin.readline() if args.graph6 == "-" else args.graph6
        g = decode_graph6(text)
        return GraphSource(g, text.strip())
    e = ex.parse_graph_expression(args.graph)
    fam = (e.r, e.s, e.t) if isinstance(e, ex.Multicone) else None
    return GraphSource(ex.evaluate_expression(e), ex.to_text(e), fam)


# --- rendering -------------------------------------------------------------

def _table(rows: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"


def _jsonable(obj):
    if isinstance(obj, (IntPoly, Spectrum)):
        return obj.to_json()
    if isinstance(obj, (DSReport, CensusReport)):
        return obj.to_json()
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def format_report(report, fmt: str = "table", timing: bool = True) -> str:
    """Render a report (or a graph) as a table, JSON or DOT text."""
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    if fmt == "dot":
        if not isinstance(report, Graph):
            raise UsageError("dot output is only available for graph payloads")
        return to_dot(report)
    if fmt == "json":
        if isinstance(report, Graph):
            payload = {"order": report.n, "graph6": encode_graph6(report), "edges": report.edges()}
        elif isinstance(report, DSReport):
            payload = report.to_json(timing=timing)
        elif isinstance(report, SweepResult):
            payload = report.to_json(records=bool(report.records))
        elif isinstance(report, Spectrum):
            payload = report.to_json()
        else:
            payload = _jsonable(report)
        return json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n"
    return _render_table(report, timing)


def _render_table(report, timing: bool) -> str:
    if isinstance(report, Graph):
        return encode_graph6(report) + "\n"
    if isinstance(report, Spectrum):
        return str(report) + "\n"
    if isinstance(report, DSReport):
        rows = [("target", report.target), ("kind", report.kind), ("order", report.order),
                ("connected only", report.connected_only), ("enumerated", report.enumerated),
                ("verdict", report.verdict), ("mates", " ".join(report.mates) or "-")]
        if timing:
            rows.append(("seconds", report.seconds))
        return _table(rows)
    if isinstance(report, CensusReport):
        rows = [("order", report.order), ("kind", report.kind), ("graphs", report.graphs),
                ("classes", report.class_count),
                ("nontrivial classes", len(report.nontrivial)),
                ("not determined", f"{report.not_determined} ({float(report.not_determined):.6f})")]
        out = _table(rows)
        for c in report.nontrivial:
            out += f"{c.polynomial}: {' '.join(c.members)}\n"
        return out
    if isinstance(report, SweepResult):
        rows = [("order", report.order), ("graphs", report.graphs),
                ("connected", report.connected)]
        rows += [(name, len(codes)) for name, codes in report.violations.items()]
        return _table(rows)
    if isinstance(report, dict):
        rows = []
        for k, v in report.items():
            if isinstance(v, (IntPoly, Spectrum)):
                v = str(v)
            elif isinstance(v, list) and k == "numeric":
                v = " ".join(f"{x:.10g}" for x in v)
            elif isinstance(v, dict):
                v = json.dumps(v, sort_keys=True)
            elif isinstance(v, list):
                v = " ".join(str(x) for x in v) or "-"
            elif v is None:
                v = "-"
            rows.append((k.replace("_", " "), v))
        return _table(rows)
    raise UsageError(f"cannot render {type(report).__name__}")


# --- subcommands -----------------------------------------------------------

def cmd_spec(args):
    src = resolve_source(args)
    rec = {"graph": src.label}
    rec.update(describe_spectrum(src.graph, args.kind, src.family, args.tol))
    return rec


def cmd_mates(args):
    src = resolve_source(args)
    rep = verify_ds(src.graph, args.kind, args.connected)
    mates = []
    for code in rep.mates:
        h = decode_graph6(code)
        mates.append({"graph6": code, "edges": h.m, "degrees": list(degree_profile(h).degrees)})
    if args.format == "json":
        return {"target": rep.target, "kind": rep.kind, "connected_only": rep.connected_only,
                "mates": mates}
    rows = {"target": rep.target, "kind": rep.kind, "mates": len(mates)}
    for k, m in enumerate(mates, 1):
        rows[f"mate {k}"] = f"{m['graph6']}  degrees {' '.join(map(str, m['degrees']))}"
    return rows


def cmd_verify_ds(args):
    return verify_ds(resolve_source(args).graph, args.kind, args.connected)


def cmd_census(args):
    return cospectral_census(args.order, args.kind)


def cmd_probe(args):
    return probe(resolve_source(args).graph, args.tol)


def cmd_sweep(args):
    return sweep(args.order, args.tol, keep_records=args.records)


def cmd_convert(args):
    g = resolve_source(args).graph
    if args.format != "table":
        return format_report(g, args.format)
    if args.to == "graph6":
        return encode_graph6(g) + "\n"
    if args.to == "dot":
        return to_dot(g)
    if args.to == "json":
        return format_report(g, "json")
    return "\n".join(f"{u} {v}" for u, v in g.edges()) + ("\n" if g.m else "")


COMMANDS = {
    "spec": cmd_spec,
    "mates": cmd_mates,
    "verify-ds": cmd_verify_ds,
    "census": cmd_census,
    "probe": cmd_probe,
    "sweep": cmd_sweep,
    "convert": cmd_convert,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--json", dest="format", action="store_const", const="json",
                        help="shorthand for --format json")
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL,
                        help="numeric tolerance (default %(default)g)")
    common.add_argument("--no-timing", action="store_true",
                        help="omit wall time so output is byte-identical across runs")
    common.add_argument("-o", "--output", help="write the report to this file")
    common.add_argument("-v", "--verbose", action="store_true",
                        help="progress logging on standard error")

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="EXPR", help='expression such as "K2 v 3*K3"')
    group.add_argument("--graph6", metavar="CODE", help="graph6 string, or - for stdin")
    group.add_argument("--family", metavar="R,S,T", type=_family, help="multicone K_r v sK_t")

    kind = argparse.ArgumentParser(add_help=False)
    kind.add_argument("--kind", choices=KINDS, default="adjacency")

    conn = argparse.ArgumentParser(add_help=False)
    conn.add_argument("--connected", action="store_true",
                      help="restrict the search to connected graphs")

    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--order", "-n", type=int, required=True)

    parser = argparse.ArgumentParser(
        prog="multicone", description="Exact spectra and cospectral-mate searches.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spec", parents=[common, source, kind],
                   help="characteristic polynomial and spectrum")
    sub.add_parser("mates", parents=[common, source, kind, conn],
                   help="cospectral mates of a graph")
    sub.add_parser("verify-ds", parents=[common, source, kind, conn],
                   help="is the graph determined by its spectrum?")
    sub.add_parser("census", parents=[common, order, kind],
                   help="cospectral classes of one order")
    sub.add_parser("probe", parents=[common, source],
                   help="structure, bound and theorem checks for one graph")
    p = sub.add_parser("sweep", parents=[common, order],
                       help="run every theorem check over all graphs of one order")
    p.add_argument("--records", action="store_true", help="include one record per graph")
    p = sub.add_parser("convert", parents=[common, source], help="translate a graph")
    p.add_argument("--to", choices=("graph6", "dot", "json", "edges"), default="graph6")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr,
                            format="%(levelname)s %(name)s: %(message)s")
    try:
        result = COMMANDS[args.command](args)
        text = result if isinstance(result, str) else format_report(
            result, args.format, timing=not args.no_timing)
    except UsageError as exc:
        print(f"multicone: usage error: {exc}", file=sys.stderr)
        return 2
    except SpectraError as exc:
        print(f"multicone: error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
