"""Command-line front end.

Examples::

    echo Bw | hadwiger chi
    hadwiger verify --enum 7 --statements H,WeakH --workers 4
    hadwiger q3 --nmax 7 --q3-mode both
    hadwiger descend --input graphs.g6

Exit codes for ``verify``: 0 all statements hold, 1 input or I/O error,
2 some statement fails, 3 timeouts (or capacity skips) but no fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import partial
from typing import TextIO

from . import certify
from .canon import DEFAULT_CAP as CANON_CAP
from .enumeration import DEFAULT_CAP as ENUM_CAP, enumerate_graphs, enumerate_upto
from .errors import CapacityError, Graph6Error
from .graph import Graph
from .graph6 import read_graph6_lines, to_graph6
from .harness import (
    DEFAULT_BUDGET,
    Q3_MODES,
    STATEMENTS,
    CapacityRecord,
    CertificateError,
    SkipRecord,
    _pool_map,
    descend_modh,
    search_question3,
    validate_trace,
    verify_stream,
)
from .solvers import chromatic_number, hadwiger_number
from .errors import SearchBudgetExceeded

EXIT_OK, EXIT_ERROR, EXIT_FAIL, EXIT_TIMEOUT = 0, 1, 2, 3


def _dump(rec: dict) -> str:
    return json.dumps(rec, separators=(", ", ": "))


def _read_input(args) -> list[tuple[int, Graph | Graph6Error]]:
    if args.enum is not None:
        if args.exact_order:
            graphs = enumerate_graphs(args.enum, args.connected)
        else:
            graphs = enumerate_upto(args.enum, args.connected)
        return list(enumerate(graphs, 1))
    if args.input:
        with open(args.input, encoding="ascii", errors="replace") as fh:
            return list(read_graph6_lines(fh))
    return list(read_graph6_lines(sys.stdin))


def _solver_task(item, kind: str, budget: int | None, max_n: int):
    lineno, g = item
    if isinstance(g, Graph6Error):
        return SkipRecord(lineno, str(g))
    if g.n > max_n:
        return CapacityRecord(to_graph6(g), g.n, max_n)
    gid = to_graph6(g)
    try:
        if kind == "chi":
            chi, coloring = chromatic_number(g, budget)
            problems = certify.check_coloring(g, coloring.colors, chi)
            if problems:
                raise CertificateError("; ".join(problems))
            return {"id": gid, "n": g.n, "chi": chi, "coloring": list(coloring.colors)}
        if kind == "hadwiger":
            h, w = hadwiger_number(g, budget)
            problems = certify.check_clique_minor(g, w.to_json(), h)
            if problems:
                raise CertificateError("; ".join(problems))
            return {"id": gid, "n": g.n, "hadwiger": h, "witness": w.to_json()}
        trace = descend_modh(g, budget, max_n)
        problems = validate_trace(trace, budget)
        if problems:
            raise CertificateError("; ".join(problems))
        return trace.to_json()
    except SearchBudgetExceeded:
        return {"id": gid, "n": g.n, "error": "timeout"}


_TSV_COLUMNS = {
    "chi": ("id", "n", "chi"),
    "hadwiger": ("id", "n", "hadwiger"),
    "descend": ("id", "status", "length"),
}


def _format(rec, fmt: str, columns) -> str:
    if isinstance(rec, (SkipRecord, CapacityRecord)):
        rec = rec.to_json()
        if fmt == "tsv":
            return "#" + "\t".join(f"{k}={v}" for k, v in rec.items())
    if fmt == "json":
        return _dump(rec)
    if "error" in rec:
        return "#" + "\t".join(f"{k}={v}" for k, v in rec.items())
    return "\t".join(str(rec[c]) for c in columns)


def cmd_solve(args, out: TextIO, kind: str) -> int:
    items = _read_input(args)
    task = partial(_solver_task, kind=kind, budget=args.budget, max_n=args.max_n)
    results = _pool_map(task, items, args.workers)
    columns = _TSV_COLUMNS[kind]
    if args.format == "tsv":
        out.write("\t".join(columns) + "\n")
    code = EXIT_OK
    for rec in results:
        out.write(_format(rec, args.format, columns) + "\n")
        if isinstance(rec, SkipRecord):
            code = EXIT_ERROR
        elif code == EXIT_OK and (isinstance(rec, CapacityRecord) or rec.get("error") == "timeout"):
            code = EXIT_TIMEOUT
        elif kind == "descend" and isinstance(rec, dict) and code in (EXIT_OK, EXIT_TIMEOUT):
            if rec.get("status") == "stuck":
                code = EXIT_FAIL
            elif rec.get("status") == "timeout":
                code = EXIT_TIMEOUT
    return code


def cmd_verify(args, out: TextIO) -> int:
    statements = [s.strip() for s in args.statements.split(",") if s.strip()]
    bad = [s for s in statements if s not in STATEMENTS]
    if bad:
        raise SystemExit(f"unknown statements: {', '.join(bad)}")
    items = _read_input(args)
    results, agg = verify_stream(items, statements, args.budget, args.workers, args.max_n)
    chosen = [s for s in STATEMENTS if s in statements]
    if args.format == "tsv":
        out.write("\t".join(["id", "n", "m", "chi", "hadwiger", *chosen, "budget_flags", "note"]) + "\n")
    for r in results:
        if isinstance(r, (SkipRecord, CapacityRecord)):
            out.write(_format(r, args.format, ()) + "\n")
        elif args.format == "json":
            out.write(_dump(r.to_json()) + "\n")
        else:
            row = [r.graph_id, r.graph.n, r.graph.num_edges, r.chi, r.hadwiger,
                   *(r.verdicts[s].value for s in chosen), ",".join(r.budget_flags), r.note or ""]
            out.write("\t".join("" if x is None else str(x) for x in row) + "\n")
    if args.format == "json":
        out.write(_dump(agg.to_json()) + "\n")
    else:
        out.write("#aggregate\t" + _dump(agg.to_json()) + "\n")
    if agg.skipped:
        return EXIT_ERROR
    if agg.fails:
        return EXIT_FAIL
    if agg.timeouts or agg.capacity:
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_q3(args, out: TextIO) -> int:
    mode = "both" if args.both_interpretations else args.q3_mode
    modes = Q3_MODES if mode == "both" else (mode,)
    code = EXIT_OK
    for m in modes:
        report = search_question3(args.nmax, m, args.budget, args.workers)
        for res in report.counterexamples:
            rec = res.to_json(m)
            if args.format == "json":
                out.write(_dump(rec) + "\n")
            else:
                out.write(f"{m}\t{rec['id']}\t{rec['chi']}\n")
        summary = report.summary_json()
        out.write((_dump(summary) if args.format == "json" else "#summary\t" + _dump(summary)) + "\n")
        if report.timeouts:
            code = EXIT_TIMEOUT
    return code


def cmd_enum(args, out: TextIO) -> int:
    for _, g in _read_input(args):
        out.write(to_graph6(g) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hadwiger", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="graph6 file, one graph per line")
    src.add_argument("--stdin", action="store_true", help="read graph6 from standard input (default)")
    src.add_argument("--enum", type=int, metavar="N",
                     help=f"built-in enumeration of all graphs on 1..N vertices (N <= {ENUM_CAP})")
    common.add_argument("--exact-order", action="store_true", help="with --enum, only graphs on exactly N vertices")
    common.add_argument("--connected", action="store_true", help="with --enum, connected graphs only")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="NODES",
                        help="per-graph search node budget")
    common.add_argument("--max-n", type=int, default=CANON_CAP, help="per-graph vertex cap")
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--output", metavar="FILE")

    sub.add_parser("chi", parents=[common], help="chromatic number with a colouring")
    sub.add_parser("hadwiger", parents=[common], help="Hadwiger number with branch sets")
    sub.add_parser("descend", parents=[common], help="iterate proper minors of equal chi down to K_chi")
    sub.add_parser("enum", parents=[common], help="print the input graphs as graph6")
    verify = sub.add_parser("verify", parents=[common], help="check statements over a graph stream")
    verify.add_argument("--statements", default=",".join(STATEMENTS),
                        help=f"comma-separated subset of {','.join(STATEMENTS)}")
    q3 = sub.add_parser("q3", parents=[common], help="search for non-complete contraction-critical graphs")
    q3.add_argument("--nmax", type=int, required=True)
    q3.add_argument("--q3-mode", choices=(*Q3_MODES, "both"), default="vs-original")
    q3.add_argument("--both-interpretations", action="store_true", help="same as --q3-mode both")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.workers < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    if args.budget <= 0:
        print("error: --budget must be positive", file=sys.stderr)
        return EXIT_ERROR
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if args.command in ("chi", "hadwiger", "descend"):
            return cmd_solve(args, out, args.command)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "q3":
            return cmd_q3(args, out)
        return cmd_enum(args, out)
    except (OSError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
