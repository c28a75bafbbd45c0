"""Command-line interface.

Exit codes: 0 success, 1 verification or audit failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .families import FamilyError, main_theorem_set, tree_theorem_set, witness
from .graph import Graph, GraphError, from_edges
from .graph6 import emit_graph6, parse_graph6
from .homology import FieldSpec, hochster_betti
from .invariants import invariant_report
from .verify import (
    EnumerationError,
    audit_stream,
    check_main_theorem,
    check_tree_theorem,
    enumerate_connected_bipartite,
    enumerate_graphs,
    enumerate_trees,
    format_summary,
    summarize,
)


class UsageError(Exception):
    pass


def _read_graph(args: argparse.Namespace) -> Graph:
    if args.edges is not None:
        try:
            data = json.loads(args.edges)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--edges is not valid JSON: {exc}") from exc
        if isinstance(data, dict):
            edges = data.get("edges", [])
            n = data.get("n")
        else:
            edges, n = data, None
        if args.n is not None:
            n = args.n
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return from_edges(n, edges)
    if args.graph is None:
        raise UsageError("give a graph6 string or --edges")
    return parse_graph6(args.graph)


def _field(args: argparse.Namespace) -> FieldSpec:
    return FieldSpec(args.char) if args.char is not None else FieldSpec.from_env()


def cmd_betti(args) -> int:
    table = hochster_betti(_read_graph(args), _field(args))
    if args.json:
        print(json.dumps(table.to_dict(), indent=2))
    else:
        print(f"pd = {table.pd()}, reg = {table.reg()} over GF({table.field_char})")
        print(table.render())
    return 0


def cmd_invariants(args) -> int:
    report = invariant_report(_read_graph(args), coc_max_n=args.coc_max_n)
    print(json.dumps(report.to_dict(), indent=2))
    return 0


def cmd_witness(args) -> int:
    m = witness(args.n, args.p, args.r)
    print(m.to_json())
    print(emit_graph6(m.graph))
    return 0


def cmd_predict_set(args) -> int:
    s = tree_theorem_set(args.n) if args.trees else main_theorem_set(args.n)
    if args.json:
        print(json.dumps([list(pr) for pr in s]))
    else:
        print(s)
    return 0


def cmd_verify(args) -> int:
    F = _field(args)
    if args.trees:
        report = check_tree_theorem(args.n, F, jobs=args.jobs)
    else:
        report = check_main_theorem(args.n, F, jobs=args.jobs, allow_large=args.allow_large)
    v = report.verdicts[0]
    obs = v.observed
    if args.json:
        print(report.to_json())
    else:
        kind = "trees" if args.trees else "connected bipartite graphs"
        print(f"{kind} on n={args.n} vertices: {obs['graphs']} isomorphism classes, GF({F.characteristic})")
        print("predicted: {" + ",".join(f"({p},{r})" for p, r in obs["predicted"]) + "}")
        realized = sorted(obs["realized"], key=lambda d: (d["reg"], d["pd"]))
        print("realized:  {" + ",".join(f"({d['pd']},{d['reg']})" for d in realized) + "}")
        for d in realized:
            print(f"  ({d['pd']},{d['reg']})  {d['witness']}")
        if obs["missing"]:
            print("missing:   " + " ".join(f"({p},{r})" for p, r in obs["missing"]))
        if obs["unexpected"]:
            print("unexpected: " + " ".join(f"({d['pd']},{d['reg']}) {d['witness']}" for d in obs["unexpected"]))
        print("PASS" if v.passed else "FAIL")
    return 0 if v.passed else 1


def _stream(args):
    if args.trees:
        return enumerate_trees(args.n)
    return enumerate_connected_bipartite(args.n, allow_large=getattr(args, "allow_large", False))


def cmd_audit(args) -> int:
    reports = audit_stream(_stream(args), _field(args), jobs=args.jobs, coc_max_n=args.coc_max_n)
    summary_out = sys.stdout
    if args.jsonl:
        if args.jsonl == "-":
            sink, summary_out = sys.stdout, sys.stderr
        else:
            sink = open(args.jsonl, "w")
        for rep in reports:
            sink.write(rep.to_json() + "\n")
        if sink is not sys.stdout:
            sink.close()
    failed = [r for r in reports if not r.passed]
    print(format_summary(summarize(reports)), file=summary_out)
    print(f"{len(reports)} graphs audited, {len(failed)} with failures", file=summary_out)
    for rep in failed:
        for v in rep.failures():
            print(f"FAIL {rep.subject} {v.check} {json.dumps(v.observed, sort_keys=True)}", file=summary_out)
    return 1 if failed else 0


def cmd_enumerate(args) -> int:
    if args.all:
        stream = enumerate_graphs(args.n, connected=args.connected)
    else:
        stream = _stream(args)
    for s in stream.graph6():
        print(s)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgebetti",
        description="Betti tables, pd and reg of edge ideals; exhaustive (pd, reg) verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("graph", nargs="?", help="graph6 string")
        p.add_argument("--edges", help='JSON edge list, e.g. "[[0,1],[1,2]]" or {"n": 4, "edges": [...]}')
        p.add_argument("--n", type=int, help="vertex count for --edges (default: max label + 1)")

    def char_arg(p):
        p.add_argument("--char", type=int, default=None,
                       help="field characteristic (default: $BETTI_CHAR or 2)")

    p = sub.add_parser("betti", help="graded Betti table of S/I(G)")
    graph_args(p)
    char_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("invariants", help="mat, indm, tau_max, coc and structural flags")
    graph_args(p)
    p.add_argument("--coc-max-n", type=int, default=8)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("witness", help="connected bipartite graph realising (pd, reg) = (p, r)")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("predict-set", help="predicted (pd, reg) set")
    p.add_argument("n", type=int)
    p.add_argument("--trees", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_predict_set)

    for name, fn, help_ in (
        ("verify", cmd_verify, "compare realised and predicted (pd, reg) sets"),
        ("audit", cmd_audit, "audit every bound on each enumerated graph"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("n", type=int)
        p.add_argument("--trees", action="store_true")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--allow-large", action="store_true", help="permit n = 10 bipartite enumeration")
        char_arg(p)
        p.set_defaults(func=fn)
    sub.choices["verify"].add_argument("--json", action="store_true")
    sub.choices["audit"].add_argument("--jsonl", help="write one JSON report per graph ('-' for stdout)")
    sub.choices["audit"].add_argument("--coc-max-n", type=int, default=8)

    p = sub.add_parser("enumerate", help="stream graph6 isomorphism-class representatives")
    p.add_argument("n", type=int)
    p.add_argument("--trees", action="store_true")
    p.add_argument("--all", action="store_true", help="all graphs instead of connected bipartite")
    p.add_argument("--connected", action="store_true", help="with --all, connected graphs only")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (UsageError, GraphError, FamilyError, EnumerationError, ValueError) as exc:
        print(f"edgebetti {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
