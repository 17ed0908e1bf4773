"""Exhaustive scans over graph corpora, collected into :class:`ScanReport` objects."""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from ..bounds import check_value_k_characterization
from ..graph import (
    Graph,
    FamilySpec,
    build_family,
    from_edge_mask,
    is_connected,
)
from ..graph6 import to_graph6_str
from ..solvers import (
    independent_domination_number,
    oracle_rik_via_product,
    rainbow_domination_number,
    solve_rik,
    verify_rik,
)
from . import checks
from .corpus import (
    MAX_LABELED_ORDER,
    enumerate_trees,
    labeled_graphs,
    random_trees,
    read_corpus,
    tree_certificate,
)
from .table import labeled_rik_table

Sink = Callable[["ScanRecord"], None]

KEEP_RECORDS_LIMIT = 5000
ENGINES = ("solver", "table")


@dataclass
class ScanRecord:
    graph6: str
    n: int
    invariants: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    label: str = ""
    multiplicity: int = 1

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        out = {"graph6": self.graph6, "n": self.n}
        if self.label:
            out["label"] = self.label
        out["invariants"] = dict(self.invariants)
        out["verdicts"] = dict(self.verdicts)
        if self.multiplicity != 1:
            out["multiplicity"] = self.multiplicity
        return out


@dataclass
class ScanReport:
    corpus: str
    checks: list
    graphs: int = 0
    passed: Counter = field(default_factory=Counter)
    counterexamples: list = field(default_factory=list)
    attainers: dict = field(default_factory=dict)
    records: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def add(self, record: ScanRecord, keep: bool = True, sink: Optional[Sink] = None) -> None:
        self.graphs += record.multiplicity
        for name, verdict in record.verdicts.items():
            if verdict:
                self.passed[name] += record.multiplicity
        if not record.ok:
            self.counterexamples.append(record)
        if keep:
            self.records.append(record)
        if sink is not None:
            sink(record)

    def finish(self, start: float) -> ScanReport:
        self.elapsed = time.perf_counter() - start
        key = lambda r: (r.n, r.graph6, r.label)
        self.records.sort(key=key)
        self.counterexamples.sort(key=key)
        for name in self.attainers:
            self.attainers[name] = sorted(self.attainers[name])
        return self

    def summary(self) -> dict:
        return {
            "corpus": self.corpus,
            "checks": list(self.checks),
            "graphs": self.graphs,
            "passed": {name: self.passed[name] for name in self.checks},
            "counterexamples": len(self.counterexamples),
            "attainers": {name: len(v) for name, v in self.attainers.items()},
            "notes": dict(self.notes),
            "elapsed_seconds": round(self.elapsed, 3),
        }


def _graph6(g: Graph) -> str:
    return to_graph6_str(g)


# -- closed-form families ------------------------------------------------------------

def path_value(n: int) -> int:
    return (n + 2) // 2


def cycle_value(n: int) -> int:
    return math.ceil(n / 2) + (1 if n % 4 in (1, 2) else 0)


def multipartite_part_vectors(max_total: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing part-size vectors, at least two parts, every part >= 2, total <= ``max_total``."""

    def extend(prefix: list[int], remaining: int):
        if len(prefix) >= 2:
            yield tuple(prefix)
        low = prefix[-1] if prefix else 2
        for part in range(low, remaining + 1):
            yield from extend(prefix + [part], remaining - part)

    yield from extend([], max_total)


def family_instances(max_n: int, star_max: Optional[int] = None, complete_max: Optional[int] = None,
                     multipartite_max: Optional[int] = None) -> Iterator[tuple[str, int]]:
    """Yield ``(family spec, expected value)`` pairs."""
    star_max = max_n if star_max is None else star_max
    complete_max = max_n if complete_max is None else complete_max
    multipartite_max = max_n if multipartite_max is None else multipartite_max
    for n in range(2, max_n + 1):
        yield f"path:{n}", path_value(n)
    for n in range(3, max_n + 1):
        yield f"cycle:{n}", cycle_value(n)
    for n in range(3, star_max + 1):
        yield f"star:{n}", n - 1
    for n in range(3, star_max + 1):
        yield f"starplus:{n}", n - 1
    for n in range(2, complete_max + 1):
        yield f"complete:{n}", 2
    for parts in multipartite_part_vectors(multipartite_max):
        yield "kmulti:" + ",".join(map(str, parts)), parts[0]


def check_family_formulas(max_n: int = 16, star_max: Optional[int] = None, complete_max: Optional[int] = None,
                          multipartite_max: Optional[int] = None, sink: Optional[Sink] = None) -> ScanReport:
    if max_n < 5:
        raise ValueError("max_n must be at least 5")
    start = time.perf_counter()
    report = ScanReport(corpus=f"families(max_n={max_n})", checks=["formula", "witness", "star_lemma"])
    for spec, expected in family_instances(max_n, star_max, complete_max, multipartite_max):
        g = build_family(FamilySpec.parse(spec))
        result = solve_rik(g, 2)
        verdicts = {"formula": result.value == expected, "witness": verify_rik(g, result.witness)}
        if spec.startswith(("star", "starplus")):
            verdicts["star_lemma"] = checks.check_star_lemma(g) and checks.is_star_or_star_plus(g)
        record = ScanRecord(_graph6(g), g.n, {"rik2": result.value, "expected": expected}, verdicts, label=spec)
        report.add(record, sink=sink)
    return report.finish(start)


# -- Nordhaus-Gaddum -----------------------------------------------------------------

def _ng_verdicts(n: int, total: int) -> dict:
    return {"bounds": 5 <= total <= n + 3, "lower_only_order3": not (total == 5 and n > 3)}


def _corpus_name(n: int, source) -> str:
    return f"labeled(n={n})" if source is None else f"file({Path(source).name}, n={n})"


def scan_nordhaus_gaddum(n: int, source=None, engine: str = "solver", sink: Optional[Sink] = None,
                         keep_records: Optional[bool] = None) -> ScanReport:
    """Check 5 <= value(G) + value(complement) <= n + 3 over a corpus and collect the extremal graphs.

    ``source`` is None for every labelled graph on ``n`` vertices (n <= 7) or
    a path to a graph6 file. ``engine="table"`` evaluates the built-in corpus
    in one vectorised pass instead of calling the solver per graph.
    """
    if not 3 <= n <= 8:
        raise ValueError(f"Nordhaus-Gaddum scans support 3 <= n <= 8, got {n}")
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    if source is None and n > MAX_LABELED_ORDER:
        raise ValueError(f"built-in labelled corpus stops at n = {MAX_LABELED_ORDER}; supply a graph6 file")
    start = time.perf_counter()
    report = ScanReport(corpus=_corpus_name(n, source), checks=["bounds", "lower_only_order3"])
    report.attainers = {"lower": [], "upper": []}
    if source is None and engine == "table":
        _ng_table(n, report, sink)
        report.notes["engine"] = "table"
        return report.finish(start)

    if source is None:
        total = 1 << (n * (n - 1) // 2)
        keep = total <= KEEP_RECORDS_LIMIT if keep_records is None else keep_records
        values: dict[int, int] = {}
        full = total - 1
        items = []
        for mask, g in labeled_graphs(n):
            values[mask] = solve_rik(g, 2).value
            items.append((mask, g))
        corpus = ((g, values[mask], values[full ^ mask]) for mask, g in items)
    else:
        graphs = read_corpus(source, n)
        keep = len(graphs) <= KEEP_RECORDS_LIMIT if keep_records is None else keep_records
        corpus = ((g, r.value, r.complement_value) for g in graphs for r in [checks.check_nordhaus_gaddum(g)])
    for g, value, comp_value in corpus:
        total_value = value + comp_value
        g6 = _graph6(g)
        record = ScanRecord(g6, n, {"rik2": value, "rik2_complement": comp_value, "sum": total_value},
                            _ng_verdicts(n, total_value))
        report.add(record, keep=keep, sink=sink)
        if total_value == 5:
            report.attainers["lower"].append(g6)
        if total_value == n + 3:
            report.attainers["upper"].append(g6)
    report.notes["engine"] = "solver"
    return report.finish(start)


def _ng_table(n: int, report: ScanReport, sink: Optional[Sink]) -> None:
    table = labeled_rik_table(n, 2).astype(np.int16)
    sums = table + table[::-1]
    report.graphs = int(sums.size)
    ok_bounds = (sums >= 5) & (sums <= n + 3)
    ok_lower = ~((sums == 5) & (n > 3))
    report.passed["bounds"] = int(ok_bounds.sum())
    report.passed["lower_only_order3"] = int(ok_lower.sum())
    report.notes["sum_histogram"] = {int(s): int(c) for s, c in zip(*np.unique(sums, return_counts=True))}

    def record_for(mask: int) -> ScanRecord:
        g = from_edge_mask(n, mask)
        value, comp = int(table[mask]), int(sums[mask] - table[mask])
        return ScanRecord(_graph6(g), n, {"rik2": value, "rik2_complement": comp, "sum": value + comp},
                          _ng_verdicts(n, value + comp))

    for mask in np.flatnonzero(~(ok_bounds & ok_lower)):
        record = record_for(int(mask))
        report.counterexamples.append(record)
        if sink is not None:
            sink(record)
    for name, target in (("lower", 5), ("upper", n + 3)):
        report.attainers[name] = [_graph6(from_edge_mask(n, int(m))) for m in np.flatnonzero(sums == target)]


def find_extremal(n: int, target: str = "upper", source=None, engine: str = "solver") -> ScanReport:
    """Scan a corpus and keep only the graphs attaining the named bound (``lower`` or ``upper``)."""
    if target not in ("lower", "upper"):
        raise ValueError("target must be 'lower' or 'upper'")
    report = scan_nordhaus_gaddum(n, source, engine=engine, keep_records=False)
    report.attainers = {target: report.attainers[target]}
    return report


# -- trees ---------------------------------------------------------------------------

class _TreeMemo:
    def __init__(self) -> None:
        self.values: dict[str, tuple[int, int]] = {}
        self.verdicts: dict[str, tuple[dict, dict]] = {}

    def tree_values(self, t: Graph) -> tuple[int, int]:
        cert = tree_certificate(t)
        if cert not in self.values:
            self.values[cert] = checks.tree_values(t)
        return self.values[cert]

    def evaluate(self, t: Graph, cert: str) -> tuple[dict, dict, bool]:
        """Return invariants, verdicts and whether the class was new."""
        if cert in self.verdicts:
            inv, verdicts = self.verdicts[cert]
            return inv, verdicts, False
        i_t, r_t = self.tree_values(t)
        verdicts = {"tree_theorem": i_t < r_t, "leaf_lemmas": checks.check_leaf_lemmas(t, self.tree_values)}
        inv = {"i": i_t, "rik2": r_t}
        self.verdicts[cert] = (inv, verdicts)
        return inv, verdicts, True


def scan_trees(max_full: int = 9, sample_orders: Iterable[int] = (10, 11, 12), samples: int = 100_000,
               seed: int = 0, sink: Optional[Sink] = None) -> ScanReport:
    """Tree theorem and leaf lemmas over all labelled trees up to ``max_full`` plus random samples.

    Verdicts are isomorphism invariant, so each labelled tree is mapped to a
    canonical certificate and every class is solved once; records carry one
    representative per class with its labelled multiplicity.
    """
    start = time.perf_counter()
    report = ScanReport(corpus=f"trees(full<= {max_full}, samples={samples} at {list(sample_orders)})",
                        checks=["tree_theorem", "leaf_lemmas"])
    memo = _TreeMemo()

    def run(trees: Iterable[Graph], tag: str) -> None:
        counts: Counter = Counter()
        reps: dict[str, tuple[Graph, dict, dict]] = {}
        for t in trees:
            cert = tree_certificate(t)
            counts[cert] += 1
            if cert not in reps:
                inv, verdicts, _ = memo.evaluate(t, cert)
                reps[cert] = (t, inv, verdicts)
        for cert, (t, inv, verdicts) in reps.items():
            record = ScanRecord(_graph6(t), t.n, dict(inv), dict(verdicts), label=tag, multiplicity=counts[cert])
            report.add(record, sink=sink)
        report.notes[tag] = {"labeled_trees": sum(counts.values()), "classes": len(reps)}

    for n in range(2, max_full + 1):
        run(enumerate_trees(n), f"full:{n}")
    for n in sample_orders:
        run(random_trees(n, samples, seed + n), f"sample:{n}")
    return report.finish(start)


# -- lemmas and corollary over graph corpora -----------------------------------------

def _graph_corpus(n: int, source) -> list[Graph]:
    if source is None:
        return [g for _, g in labeled_graphs(n)]
    return read_corpus(source, n)


def scan_lemmas(n: int, source=None, sink: Optional[Sink] = None) -> ScanReport:
    """Components lemma, star lemma and leaf observation on every graph of the corpus."""
    start = time.perf_counter()
    report = ScanReport(corpus=_corpus_name(n, source), checks=["components_lemma", "star_lemma", "leaf_observation"])
    graphs = _graph_corpus(n, source)
    keep = len(graphs) <= KEEP_RECORDS_LIMIT
    for g in graphs:
        verdicts = {"components_lemma": checks.check_components_lemma(g)}
        if g.n >= 3:
            verdicts["star_lemma"] = checks.check_star_lemma(g)
        if all(g.adj):
            verdicts["leaf_observation"] = checks.check_leaf_observation(g)
        report.add(ScanRecord(_graph6(g), g.n, {"rik2": checks.rik2(g)}, verdicts), keep=keep, sink=sink)
    return report.finish(start)


def scan_corollary(n: int, k: int = 2, source=None, sink: Optional[Sink] = None) -> ScanReport:
    start = time.perf_counter()
    report = ScanReport(corpus=_corpus_name(n, source), checks=["corollary"])
    graphs = _graph_corpus(n, source)
    keep = len(graphs) <= KEEP_RECORDS_LIMIT
    equal = 0
    for g in graphs:
        i_val = independent_domination_number(g).value
        r_val = solve_rik(g, k).value
        equal += i_val == r_val
        verdicts = {"corollary": checks.check_corollary_independence(g, k)}
        report.add(ScanRecord(_graph6(g), g.n, {"i": i_val, f"rik{k}": r_val}, verdicts), keep=keep, sink=sink)
    report.notes["premise_holds"] = equal
    return report.finish(start)


# -- solver cross-checks -------------------------------------------------------------

def scan_oracle_equivalence(n: int, ks: Iterable[int] = (1, 2, 3), source=None,
                            sink: Optional[Sink] = None) -> ScanReport:
    """Solver value against i(G □ K_k) for every graph and every k."""
    ks = list(ks)
    start = time.perf_counter()
    report = ScanReport(corpus=_corpus_name(n, source), checks=["oracle"])
    graphs = _graph_corpus(n, source)
    keep = len(graphs) <= KEEP_RECORDS_LIMIT
    for g in graphs:
        inv = {}
        ok = True
        for k in ks:
            value = solve_rik(g, k).value
            oracle = oracle_rik_via_product(g, k)
            inv[f"rik{k}"], inv[f"oracle{k}"] = value, oracle
            ok &= value == oracle
        report.add(ScanRecord(_graph6(g), g.n, inv, {"oracle": ok}), keep=keep, sink=sink)
    return report.finish(start)


def scan_characterization(n: int, ks: Iterable[int] = (2, 3), sink: Optional[Sink] = None) -> ScanReport:
    """Structural value-k test against the solver over connected labelled graphs with n >= k."""
    ks = [k for k in ks if n >= k]
    start = time.perf_counter()
    report = ScanReport(corpus=f"connected-labeled(n={n})", checks=["characterization"])
    keep = (1 << (n * (n - 1) // 2)) <= KEEP_RECORDS_LIMIT
    for _, g in labeled_graphs(n):
        if not is_connected(g):
            continue
        inv = {}
        ok = True
        for k in ks:
            structural = check_value_k_characterization(g, k)
            value = solve_rik(g, k).value
            inv[f"rik{k}"] = value
            ok &= structural == (value == k)
        report.add(ScanRecord(_graph6(g), n, inv, {"characterization": ok}), keep=keep, sink=sink)
    return report.finish(start)


def scan_wu_xing(n: int, sink: Optional[Sink] = None) -> ScanReport:
    """Check 5 <= rk2(G) + rk2(complement) <= n + 2 with the set-labelling solver."""
    if not 3 <= n <= 6:
        raise ValueError("Wu-Xing scans support 3 <= n <= 6")
    start = time.perf_counter()
    report = ScanReport(corpus=f"labeled(n={n})", checks=["wu_xing"])
    values: dict[int, int] = {}
    items = []
    for mask, g in labeled_graphs(n):
        values[mask] = rainbow_domination_number(g, 2).value
        items.append((mask, g))
    full = (1 << (n * (n - 1) // 2)) - 1
    keep = len(items) <= KEEP_RECORDS_LIMIT
    for mask, g in items:
        total = values[mask] + values[full ^ mask]
        record = ScanRecord(_graph6(g), n, {"r2": values[mask], "r2_complement": values[full ^ mask], "sum": total},
                            {"wu_xing": 5 <= total <= n + 2})
        report.add(record, keep=keep, sink=sink)
    return report.finish(start)


def scan_table_agreement(n: int, k: int = 2, sink: Optional[Sink] = None) -> ScanReport:
    """Branch-and-bound solver against the vectorised table on every labelled graph."""
    start = time.perf_counter()
    report = ScanReport(corpus=f"labeled(n={n})", checks=["table"])
    table = labeled_rik_table(n, k)
    keep = table.size <= KEEP_RECORDS_LIMIT
    for mask, g in labeled_graphs(n):
        value = solve_rik(g, k).value
        report.add(ScanRecord(_graph6(g), n, {f"rik{k}": value, "table": int(table[mask])},
                              {"table": value == int(table[mask])}), keep=keep, sink=sink)
    return report.finish(start)

