"""Command-line front end.

Exit status: 0 when every check is verified or cleanly partial, 1 when any
violation or equality mismatch was found, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Any, Iterable, Sequence

from . import families
from .checks import (
    CATALOG,
    CheckVerdict,
    EqualityMismatch,
    Violation,
    get_check,
    native_population,
    run_check_parallel,
)
from .enumeration import MAX_GRAPH_ORDER, MAX_TREE_ORDER, connected_graphs, free_trees, read_g6_stream
from .graph import Graph, is_connected, is_tree
from .graph6 import Graph6Error, encode
from .invariants import is_caterpillar, is_self_centered, summarize
from .transforms import contract_edge, line_graph

log = logging.getLogger("wienerecc")

CSV_COLUMNS = (
    "graph6", "n", "m", "wiener", "total_ecc", "ecc_connectivity",
    "radius", "diameter", "is_tree", "is_caterpillar", "is_self_centered",
)
VERDICT_COLUMNS = (
    "check_id", "status", "population", "graphs_tested", "skipped",
    "violations", "equality_mismatches",
)


class UsageError(Exception):
    pass


def invariant_record(g: Graph) -> dict[str, Any]:
    s = summarize(g)
    tree = is_tree(g)
    return {
        "graph6": encode(g),
        "n": g.n,
        "m": g.m,
        "wiener": s.wiener,
        "total_ecc": s.total_ecc,
        "ecc_connectivity": s.ecc_connectivity,
        "radius": s.radius,
        "diameter": s.diameter,
        "center": list(s.center),
        "is_self_centered": is_self_centered(s),
        "is_tree": tree,
        "is_caterpillar": tree and is_caterpillar(g),
    }


def _csv_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _parse_ints(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# --------------------------------------------------------------------------
# subcommands

def cmd_invariants(args: argparse.Namespace, out) -> int:
    source = args.input or args.source or "-"
    writer = None
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
    for g in read_g6_stream(source, strict=args.strict):
        if args.contract is not None:
            g = contract_edge(g, tuple(args.contract))
        if args.line_graph:
            g = line_graph(g)
        if g.n == 0 or not is_connected(g):
            msg = f"{encode(g)}: graph is empty or disconnected, invariants undefined"
            if args.strict:
                raise UsageError(msg)
            log.warning(msg)
            continue
        rec = invariant_record(g)
        if writer is not None:
            writer.writerow([_csv_value(rec[c]) for c in CSV_COLUMNS])
        else:
            out.write(json.dumps(rec) + "\n")
    return 0


def _family_spec(args: argparse.Namespace) -> families.FamilySpec:
    name = args.name
    need_n = name in {"path", "cycle", "star", "complete", "kn_minus_matching"}
    if need_n and args.n is None:
        raise UsageError(f"family {name} needs --n")
    if name == "kn_minus_matching":
        params = (args.n, args.t or 0)
    elif name == "complete_bipartite":
        params = tuple(_parse_ints(args.parts))
        if len(params) != 2:
            raise UsageError("complete_bipartite needs --parts a,b")
    elif name == "caterpillar":
        params = tuple(_parse_ints(args.leaf_counts))
    elif name == "spider":
        params = tuple(_parse_ints(args.legs))
    elif need_n:
        params = (args.n,)
    else:
        params = ()
    return families.FamilySpec(name, params)


def cmd_family(args: argparse.Namespace, out) -> int:
    try:
        g = families.build(_family_spec(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(encode(g) + "\n")
    return 0


def cmd_enumerate(args: argparse.Namespace, out) -> int:
    if args.trees:
        if not 1 <= args.n <= MAX_TREE_ORDER:
            raise UsageError(f"--n must be in 1..{MAX_TREE_ORDER} for trees")
        stream: Iterable[Graph] = free_trees(args.n)
    else:
        if not 1 <= args.n <= MAX_GRAPH_ORDER:
            raise UsageError(f"--n must be in 1..{MAX_GRAPH_ORDER} for graphs; use graph6 files beyond")
        stream = connected_graphs(args.n)
    for g in stream:
        out.write(encode(g) + "\n")
    return 0


class _CounterexampleFile:
    """Append-only tab-separated log, flushed after every record."""

    def __init__(self, path: str | None):
        self.handle = open(path, "a", encoding="ascii") if path else None

    def __call__(self, check_id: str, item: Violation | EqualityMismatch) -> None:
        if self.handle is None:
            return
        if isinstance(item, Violation):
            fields = [item.graph6, check_id, "violation", item.lhs, item.rhs, item.detail]
        else:
            kind = "equality_outside_class" if item.actual_equality else "class_member_strict"
            fields = [item.graph6, check_id, kind, item.lhs, item.rhs, item.detail]
        self.handle.write("\t".join(str(f) for f in fields) + "\n")
        self.handle.flush()

    def close(self) -> None:
        if self.handle is not None:
            self.handle.close()


def _skipped(check_id: str, population: str, reason: str) -> CheckVerdict:
    cls = get_check(check_id)
    return CheckVerdict(check_id, cls.statement, population, 0, 0, [], [], "skipped",
                        {"reason": reason})


def _file_population(path: str, strict: bool) -> tuple[str, Any]:
    if path == "-":
        cached = list(read_g6_stream("-", strict=strict))
        return "file(-)", lambda: iter(cached)
    return f"file({path})", lambda: read_g6_stream(path, strict=strict)


def _run_checks(ids: Sequence[str], args: argparse.Namespace, out, explicit: bool) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    sink = _CounterexampleFile(args.counterexamples)
    file_pop = _file_population(args.input, args.strict) if args.input else None
    verdicts = []
    try:
        for cid in ids:
            cls = get_check(cid)
            if file_pop is not None:
                label, make = file_pop
                verdicts.append(run_check_parallel(cid, make(), label, args.jobs, sink))
                continue
            ceiling = MAX_GRAPH_ORDER if cls.kind == "graphs" else MAX_TREE_ORDER
            kind_name = "connected_graphs" if cls.kind == "graphs" else "free_trees"
            label = f"{kind_name}(n=1..{args.max_n})"
            if args.max_n > ceiling:
                if explicit:
                    raise UsageError(
                        f"--max-n {args.max_n} above the {kind_name} ceiling {ceiling} for {cid}"
                    )
                verdicts.append(_skipped(cid, label, f"max_n above native ceiling {ceiling}; use --input"))
                continue
            if args.max_n < cls.min_order:
                verdicts.append(_skipped(cid, label, f"statement needs n >= {cls.min_order}"))
                continue
            label, stream = native_population(cls.kind, args.max_n)
            verdicts.append(run_check_parallel(cid, stream, label, args.jobs, sink))
    finally:
        sink.close()
    _write_verdicts(verdicts, args.format, out)
    return 1 if any(v.status == "refuted" for v in verdicts) else 0


def _write_verdicts(verdicts: list[CheckVerdict], fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(VERDICT_COLUMNS)
        for v in verdicts:
            w.writerow([v.check_id, v.status, v.population, v.graphs_tested, v.skipped,
                        len(v.violations), len(v.equality_mismatches)])
    else:
        for v in verdicts:
            out.write(json.dumps(v.to_record()) + "\n")


def cmd_verify(args: argparse.Namespace, out) -> int:
    if args.check == "all":
        return _run_checks(list(CATALOG), args, out, explicit=False)
    try:
        get_check(args.check)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _run_checks([args.check], args, out, explicit=True)


def cmd_search(args: argparse.Namespace, out) -> int:
    return _run_checks([f"CONJ{args.conjecture}"], args, out, explicit=True)


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wienerecc",
        description="Wiener index vs. eccentricity: invariants, families and exhaustive checks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant records for graph6 input")
    p.add_argument("source", nargs="?", help="graph6 file or - for stdin")
    p.add_argument("--input", help="graph6 file or - for stdin")
    p.add_argument("--format", choices=("records", "csv"), default="records")
    p.add_argument("--line-graph", action="store_true", help="summarise the line graph instead")
    p.add_argument("--contract", nargs=2, type=int, metavar=("U", "V"),
                   help="contract edge U-V first (before --line-graph)")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("family", help="emit one family member as graph6")
    p.add_argument("name", choices=families.FAMILY_NAMES)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int, help="matching size for kn_minus_matching")
    p.add_argument("--parts", help="a,b for complete_bipartite")
    p.add_argument("--legs", help="leg lengths for spider")
    p.add_argument("--leaf-counts", help="leaves per spine vertex for caterpillar")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="emit a population as graph6")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--trees", action="store_true")
    which.add_argument("--graphs", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    for name, helptext in (("verify", "run catalog checks"), ("search", "sweep a conjecture")):
        p = sub.add_parser(name, help=helptext)
        if name == "verify":
            p.add_argument("--check", required=True, help=f"one of {', '.join(CATALOG)} or all")
        else:
            p.add_argument("--conjecture", type=int, choices=(1, 2), required=True)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--max-n", type=int)
        src.add_argument("--input")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--counterexamples", help="append counterexample lines to this file")
        p.add_argument("--format", choices=("records", "csv"), default="records")
        p.add_argument("--strict", action="store_true")
        p.set_defaults(func=cmd_verify if name == "verify" else cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args, sys.stdout)
    except (UsageError, Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
