"""Command-line surface: exact Ramsey numbers, arrowing decisions, bound
sweeps, graph enumeration and witness validation.

Exit codes: 0 success, 1 theorem violation / invalid witness, 2 usage
error, 3 budget exceeded.  Runs are bit-reproducible for identical flags;
--jobs only partitions the search tree.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Optional

from ramsey.arrowing import (
    Budget,
    BudgetExceededError,
    SearchCapError,
    arrows,
    coloring_from_text,
    coloring_to_text,
    find_good_coloring,
    ramsey_number_with_witness,
    verify_coloring,
)
from ramsey.bounds import SweepViolationError, sweep, write_reports_jsonl
from ramsey.enumeration import EnumFilter, enumerate_graphs
from ramsey.families import NameParseError, graph_from_name
from ramsey.graphs import GraphError, graph6_encode

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

BUDGET_ENV = "RAMSEY_BUDGET_SECS"


def _budget_from(args) -> Optional[Budget]:
    secs = args.budget
    if secs is None:
        env = os.environ.get(BUDGET_ENV)
        if env:
            try:
                secs = float(env)
            except ValueError:
                raise SystemExit(f"bad {BUDGET_ENV}={env!r}")
    return Budget(max_seconds=secs) if secs is not None else None


def _graph(name: str):
    return graph_from_name(name)


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9,]+", "_", name).strip("_")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ramsey",
        description="Exact small Ramsey numbers by exhaustive 2-coloring search.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--budget", type=float, default=None,
                       help=f"time budget in seconds (default: ${BUDGET_ENV} or unlimited)")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker processes for search-tree partitioning")

    p = sub.add_parser("ramsey", help="compute r(F,G) and write the (r-1)-witness")
    p.add_argument("--red", required=True, metavar="NAME", help="pattern forbidden in red (F)")
    p.add_argument("--blue", required=True, metavar="NAME", help="pattern forbidden in blue (G)")
    p.add_argument("--max-n", type=int, default=32, help="give up beyond this order")
    p.add_argument("--witness", metavar="FILE", default=None,
                   help="where to write the (r-1)-witness (default: derived from the names)")
    add_common(p)

    p = sub.add_parser("arrows", help="decide K_n -> (F,G)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--red", required=True, metavar="NAME")
    p.add_argument("--blue", required=True, metavar="NAME")
    p.add_argument("--witness", metavar="FILE", default=None,
                   help="write the good coloring here when one exists")
    add_common(p)

    p = sub.add_parser("verify", help="sweep a bound over enumerated graphs")
    p.add_argument("--theorem", required=True, choices=["t1", "t2", "l31", "l32", "t3"])
    p.add_argument("--q-max", type=int, default=None, help="largest edge count to sweep")
    p.add_argument("--k", type=int, default=None, help="k of K_{2,k} (l31/l32/t3)")
    p.add_argument("--json", metavar="FILE", default=None, help="also write JSON lines here")
    p.add_argument("--resume", action="store_true",
                   help="skip graphs already present in the --json file")
    add_common(p)

    p = sub.add_parser("enumerate", help="list non-isomorphic graphs with q edges")
    p.add_argument("--edges", type=int, required=True, metavar="Q")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--allow-isolated", action="store_true")
    p.add_argument("--max-vertices", type=int, default=None)

    p = sub.add_parser("witness-check", help="validate a witness file against the patterns")
    p.add_argument("--file", required=True)
    p.add_argument("--red", required=True, metavar="NAME")
    p.add_argument("--blue", required=True, metavar="NAME")

    return ap


def _cmd_ramsey(args) -> int:
    F = _graph(args.red)
    G = _graph(args.blue)
    r, witness = ramsey_number_with_witness(
        F, G, n_max=args.max_n, budget=_budget_from(args), jobs=args.jobs)
    print(r)
    if witness is not None:
        path = args.witness or f"{_slug(args.red)}_{_slug(args.blue)}.witness"
        with open(path, "w") as fp:
            fp.write(coloring_to_text(witness))
        print(f"witness for n={r - 1} written to {path}", file=sys.stderr)
    return EXIT_OK


def _cmd_arrows(args) -> int:
    F = _graph(args.red)
    G = _graph(args.blue)
    out = arrows(args.n, F, G, budget=_budget_from(args), jobs=args.jobs)
    if out.arrows:
        print("ARROWS")
    else:
        print("GOOD COLORING EXISTS")
        if args.witness:
            with open(args.witness, "w") as fp:
                fp.write(coloring_to_text(out.witness))
            print(f"witness written to {args.witness}", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    skip = set()
    if args.resume and args.json and os.path.exists(args.json):
        with open(args.json) as fp:
            for line in fp:
                try:
                    row = json.loads(line)
                except json.JSONDecodeError:
                    continue
                if "graph" in row:
                    skip.add(row["graph"]["g6"])
    sink = open(args.json, "a" if args.resume else "w") if args.json else None

    def emit(report):
        line = json.dumps(report.to_json())
        print(line)
        if sink:
            sink.write(line + "\n")
            sink.flush()

    try:
        result = sweep(args.theorem, q_max=args.q_max, k=args.k,
                       budget=_budget_from(args), jobs=args.jobs, on_report=emit,
                       skip=skip or None)
    except SweepViolationError as e:
        print(f"VIOLATION: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    finally:
        if sink:
            sink.close()
    footer = json.dumps(result.summary_json())
    print(footer)
    if args.json:
        with open(args.json, "a") as fp:
            fp.write(footer + "\n")
    if result.incomplete:
        print(f"incomplete: {len(result.incomplete)} graph(s) ran out of budget",
              file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK if result.ok else EXIT_VIOLATION


def _cmd_enumerate(args) -> int:
    f = EnumFilter(q=args.edges,
                   require_isolate_free=not args.allow_isolated,
                   require_connected=args.connected,
                   max_vertices=args.max_vertices)
    for g in enumerate_graphs(f):
        print(graph6_encode(g))
    return EXIT_OK


def _cmd_witness_check(args) -> int:
    F = _graph(args.red)
    G = _graph(args.blue)
    try:
        with open(args.file) as fp:
            coloring = coloring_from_text(fp.read())
    except (OSError, ValueError) as e:
        print(f"INVALID: {e}")
        return EXIT_VIOLATION
    if verify_coloring(coloring, F, G):
        print("VALID")
        return EXIT_OK
    print("INVALID: coloring contains a red pattern or a blue pattern")
    return EXIT_VIOLATION


_DISPATCH = {
    "ramsey": _cmd_ramsey,
    "arrows": _cmd_arrows,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "witness-check": _cmd_witness_check,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (NameParseError, GraphError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as e:
        print(f"budget exceeded after {e.nodes} nodes", file=sys.stderr)
        return EXIT_BUDGET
    except SearchCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
