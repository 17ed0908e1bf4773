"""Command-line entry point.

Exit statuses: 0 success, 1 counterexample found, 2 input error,
3 size guard exceeded.

Result records (``solve``) always carry the fields, in this order::

    graph6, n, k, invariant, value, witness, lower, upper, nodes[, ms][, error]

``ms`` only appears with ``--timing`` so that repeated runs stay
byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional, TextIO

from .bounds import STRATEGIES, degree_lower_bound, partial_gid_bound
from .graph import (
    FamilySpec,
    Graph,
    GraphError,
    build_family,
    cartesian_product,
    complete_graph,
    format_edge_list_text,
    parse_edge_list_text,
)
from .graph6 import MAX_ORDER, emit_graph6, parse_graph6, to_graph6_str
from .lab import scans
from .solvers import (
    GuardExceeded,
    domination_number,
    independence_number,
    independent_domination_number,
    independent_rainbow_domination_number,
    oracle_rik_via_product,
    rainbow_domination_number,
    solve_rik,
    verify_rainbow,
    verify_rik,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

INVARIANTS = ("rik", "i", "alpha", "gamma", "rk", "irk", "oracle")
FORMATS = ("json", "csv", "human")
CHECKS = ("nordhaus-gaddum", "trees", "families", "lemmas", "corollary", "oracle", "characterization", "wu-xing")
RECORD_FIELDS = ("graph6", "n", "k", "invariant", "value", "witness", "lower", "upper", "nodes")


@dataclass
class RunConfig:
    command: str
    k: int = 2
    input: Optional[str] = None
    family: Optional[str] = None
    input_format: str = "graph6"
    output_format: str = "json"
    invariants: list = field(default_factory=lambda: ["rik"])
    witness: bool = False
    timing: bool = False
    guard: Optional[int] = None
    strategy: str = "degree"


class InputError(Exception):
    pass


# -- inputs ------------------------------------------------------------------------

def _load_graphs(config: RunConfig) -> Iterator[tuple[Optional[Graph], Optional[str]]]:
    """Yield ``(graph, None)`` or ``(None, error message)`` per input item."""
    if (config.input is None) == (config.family is None):
        raise InputError("give exactly one of --input or --family")
    if config.family is not None:
        try:
            yield build_family(FamilySpec.parse(config.family)), None
        except GraphError as exc:
            raise InputError(str(exc)) from None
        return
    try:
        text = Path(config.input).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {config.input}: {exc}") from None
    if config.input_format == "edgelist":
        try:
            yield parse_edge_list_text(text), None
        except GraphError as exc:
            raise InputError(f"{config.input}: {exc}") from None
        return
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line), None
        except GraphError as exc:
            yield None, f"line {lineno}: {exc}"


# -- solve -------------------------------------------------------------------------

def _graph_key(g: Graph) -> str:
    return to_graph6_str(g) if g.n <= MAX_ORDER else f"n={g.n}"


def _compute(g: Graph, invariant: str, config: RunConfig) -> dict:
    k = config.k
    lower, upper = 0, g.n
    witness = None
    nodes = 0
    ms = 0.0
    if invariant == "rik":
        result = solve_rik(g, k, strategy=config.strategy)
        lower = degree_lower_bound(g, k)
        upper, _ = partial_gid_bound(g, k, config.strategy)
        value, witness, nodes, ms = result.value, result.witness, result.stats.nodes, result.stats.elapsed * 1e3
        assert verify_rik(g, witness)
    elif invariant == "i":
        result = independent_domination_number(g)
        value, witness, nodes, ms = result.value, result.witness, result.stats.nodes, result.stats.elapsed * 1e3
    elif invariant == "alpha":
        value = independence_number(g)
    elif invariant == "gamma":
        value = domination_number(g)
    elif invariant in ("rk", "irk"):
        solver = rainbow_domination_number if invariant == "rk" else independent_rainbow_domination_number
        result = solver(g, k)
        upper = k * g.n
        value, witness, nodes, ms = result.value, result.witness, result.stats.nodes, result.stats.elapsed * 1e3
        assert verify_rainbow(g, witness, independent=invariant == "irk")
    elif invariant == "oracle":
        value = oracle_rik_via_product(g, k, config.guard)
        lower = degree_lower_bound(g, k)
        upper, _ = partial_gid_bound(g, k, config.strategy)
    else:
        raise InputError(f"unknown invariant {invariant!r}")
    record = {
        "graph6": _graph_key(g),
        "n": g.n,
        "k": k,
        "invariant": invariant,
        "value": value,
        "witness": witness.encode() if (config.witness and witness is not None) else None,
        "lower": lower,
        "upper": upper,
        "nodes": nodes,
    }
    if config.timing:
        record["ms"] = round(ms, 3)
    return record


class RecordWriter:
    def __init__(self, out: TextIO, fmt: str, timing: bool):
        self.out = out
        self.fmt = fmt
        self.fields = list(RECORD_FIELDS) + (["ms"] if timing else []) + ["error"]
        self._csv = None
        if fmt == "csv":
            self._csv = csv.DictWriter(out, fieldnames=self.fields, lineterminator="\r\n", extrasaction="ignore")
            self._csv.writeheader()

    def write(self, record: dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(record) + "\n")
        elif self.fmt == "csv":
            row = dict(record)
            if isinstance(row.get("witness"), list):
                row["witness"] = json.dumps(row["witness"])
            self._csv.writerow({f: "" if row.get(f) is None else row.get(f) for f in self.fields})
        else:
            self.out.write(_human_record(record) + "\n")


def _human_record(record: dict) -> str:
    head = f"{record['graph6']}  n={record['n']}  k={record['k']}  {record['invariant']}"
    if record.get("error"):
        return f"{head}  ERROR: {record['error']}"
    lines = [f"{head} = {record['value']}"]
    if record["invariant"] in ("rik", "oracle"):
        lines.append(f"  bounds: degree lower {record['lower']}, GID upper {record['upper']}")
    else:
        lines.append(f"  bounds: [{record['lower']}, {record['upper']}]")
    if record.get("witness") is not None:
        lines.append(f"  witness: {record['witness']}")
    lines.append(f"  nodes: {record['nodes']}" + (f"  ms: {record['ms']}" if "ms" in record else ""))
    return "\n".join(lines)


def cmd_solve(config: RunConfig, out: TextIO = sys.stdout) -> int:
    for name in config.invariants:
        if name not in INVARIANTS:
            raise InputError(f"unknown invariant {name!r}; expected some of {', '.join(INVARIANTS)}")
    writer = RecordWriter(out, config.output_format, config.timing)
    status = EXIT_OK
    guard_hit = False
    for g, error in _load_graphs(config):
        if g is None:
            writer.write({"graph6": None, "n": None, "k": config.k, "invariant": None, "error": error})
            status = EXIT_INPUT
            continue
        for name in config.invariants:
            try:
                writer.write(_compute(g, name, config))
            except GuardExceeded as exc:
                guard_hit = True
                writer.write({"graph6": _graph_key(g), "n": g.n, "k": config.k, "invariant": name,
                              "error": f"guard exceeded: {exc}"})
    if status == EXIT_OK and guard_hit:
        status = EXIT_GUARD
    return status


# -- product -----------------------------------------------------------------------

def cmd_product(config: RunConfig, out: TextIO = sys.stdout, emit: str = "graph6") -> int:
    status = EXIT_OK
    for g, error in _load_graphs(config):
        if g is None:
            sys.stderr.write(f"error: {error}\n")
            status = EXIT_INPUT
            continue
        p = cartesian_product(g, complete_graph(config.k))
        if emit == "graph6":
            if p.n > MAX_ORDER:
                sys.stderr.write(f"error: product has {p.n} vertices; graph6 output supports at most {MAX_ORDER}\n")
                status = EXIT_INPUT
                continue
            out.write(emit_graph6(p).decode("ascii") + "\n")
        else:
            out.write(format_edge_list_text(p))
    return status


def cmd_generate(spec: str, out: TextIO = sys.stdout, emit: str = "graph6") -> int:
    try:
        g = build_family(FamilySpec.parse(spec))
    except GraphError as exc:
        raise InputError(str(exc)) from None
    out.write(to_graph6_str(g) + "\n" if emit == "graph6" else format_edge_list_text(g))
    return EXIT_OK


# -- verify ------------------------------------------------------------------------

def run_check(args: argparse.Namespace) -> scans.ScanReport:
    check = args.check
    corpus = args.corpus
    if check == "nordhaus-gaddum":
        return scans.scan_nordhaus_gaddum(args.n, corpus, engine=args.engine)
    if check == "trees":
        full = min(args.max_n, 9)
        return scans.scan_trees(full, range(full + 1, args.max_n + 1), args.samples, args.seed)
    if check == "families":
        return scans.check_family_formulas(args.max_n)
    if check == "lemmas":
        return scans.scan_lemmas(args.n, corpus)
    if check == "corollary":
        return scans.scan_corollary(args.n, args.k, corpus)
    if check == "oracle":
        return scans.scan_oracle_equivalence(args.n, [args.k] if args.k_given else (1, 2, 3), corpus)
    if check == "characterization":
        return scans.scan_characterization(args.n)
    if check == "wu-xing":
        return scans.scan_wu_xing(args.n)
    raise InputError(f"unknown check {check!r}; expected one of {', '.join(CHECKS)}")


def write_report(report: scans.ScanReport, out: TextIO, fmt: str, records: bool, timing: bool) -> None:
    summary = report.summary()
    if not timing:
        summary.pop("elapsed_seconds")
    kept = report.records if records else []
    if fmt == "json":
        for rec in kept:
            out.write(json.dumps({"record": rec.to_dict()}) + "\n")
        for rec in report.counterexamples:
            out.write(json.dumps({"counterexample": rec.to_dict()}) + "\n")
        out.write(json.dumps({"summary": summary, "attainers": report.attainers}) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\r\n")
        w.writerow(["kind", "graph6", "n", "label", "multiplicity", "invariants", "verdicts"])
        rows = [("record", r) for r in kept] + [("counterexample", r) for r in report.counterexamples]
        for kind, r in rows:
            w.writerow([kind, r.graph6, r.n, r.label, r.multiplicity,
                        json.dumps(r.invariants, sort_keys=True), json.dumps(r.verdicts, sort_keys=True)])
        for name, graphs in report.attainers.items():
            for g6 in graphs:
                w.writerow([f"attainer:{name}", g6, "", "", "", "", ""])
    else:
        out.write(f"corpus: {summary['corpus']}\n")
        out.write(f"graphs checked: {summary['graphs']}\n")
        for name, count in summary["passed"].items():
            out.write(f"  {name}: {count} passed\n")
        out.write(f"counterexamples: {summary['counterexamples']}\n")
        for rec in report.counterexamples:
            out.write(f"  {rec.graph6} {rec.label} {rec.invariants} {rec.verdicts}\n")
        for name, graphs in report.attainers.items():
            out.write(f"{name} attainers: {len(graphs)}\n")
            for g6 in graphs[:50]:
                out.write(f"  {g6}\n")
        for key, value in summary["notes"].items():
            out.write(f"{key}: {value}\n")
        if timing:
            out.write(f"elapsed: {summary['elapsed_seconds']} s\n")


# -- argument parsing --------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="graph6 file (one graph per line) or edge-list file")
    src.add_argument("--family", help="family spec such as path:5, cycle:6, star:7, kmulti:2,3,3")
    p.add_argument("--format", dest="input_format", choices=("graph6", "edgelist"), default="graph6")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ridom", description="Exact k-rainbow independent domination toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute invariants of input graphs")
    _add_input(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--invariant", default="rik", help=f"comma-separated subset of {','.join(INVARIANTS)}")
    p.add_argument("--output", choices=FORMATS, default="json")
    p.add_argument("--witness", action="store_true", help="include an optimal labelling")
    p.add_argument("--timing", action="store_true", help="include wall-clock milliseconds")
    p.add_argument("--guard", type=int, help="vertex guard for the product oracle")
    p.add_argument("--strategy", choices=STRATEGIES, default="degree")

    p = sub.add_parser("verify", help="run an exhaustive check")
    p.add_argument("check", choices=CHECKS)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--k", type=int)
    p.add_argument("--corpus", help="graph6 file to scan instead of all labelled graphs")
    p.add_argument("--engine", choices=scans.ENGINES, default="solver")
    p.add_argument("--samples", type=int, default=100_000, help="random trees per order above 9")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=FORMATS, default="json")
    p.add_argument("--records", action="store_true", help="emit every kept per-graph record")
    p.add_argument("--timing", action="store_true")

    p = sub.add_parser("product", help="emit G □ K_k")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit", choices=("graph6", "edgelist"), default="graph6")

    p = sub.add_parser("generate", help="emit a family graph")
    p.add_argument("family")
    p.add_argument("--emit", choices=("graph6", "edgelist"), default="graph6")
    return parser


def main(argv: Optional[list] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if getattr(args, "k", None) is not None and args.k < 1:
            raise InputError("--k must be positive")
        if getattr(args, "guard", None) is not None and args.guard < 1:
            raise InputError("--guard must be positive")
        if args.command == "solve":
            config = RunConfig("solve", k=args.k, input=args.input, family=args.family,
                               input_format=args.input_format, output_format=args.output,
                               invariants=[s.strip() for s in args.invariant.split(",") if s.strip()],
                               witness=args.witness, timing=args.timing, guard=args.guard, strategy=args.strategy)
            return cmd_solve(config, out)
        if args.command == "product":
            config = RunConfig("product", k=args.k, input=args.input, family=args.family,
                               input_format=args.input_format)
            return cmd_product(config, out, args.emit)
        if args.command == "generate":
            return cmd_generate(args.family, out, args.emit)
        args.k_given = args.k is not None
        if args.k is None:
            args.k = 2
        report = run_check(args)
        write_report(report, out, args.output, args.records, args.timing)
        return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except GuardExceeded as exc:
        sys.stderr.write(f"guard exceeded: {exc}\n")
        return EXIT_GUARD
    except (GraphError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
