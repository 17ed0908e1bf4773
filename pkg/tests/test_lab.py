import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings

from oracles import brute_rik, edge_set
from ridom.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    from_edge_mask,
    is_tree,
    path_graph,
    star_graph,
    star_plus_graph,
)
from ridom.graph6 import parse_graph6, to_graph6_str
from ridom.lab import checks
from ridom.lab.corpus import (
    enumerate_trees,
    labeled_graphs,
    prufer_decode,
    prufer_encode,
    random_trees,
    read_corpus,
    tree_certificate,
)
from ridom.lab.fixtures import (
    figure2_left,
    figure2_left_labeling,
    figure2_right,
    figure2_right_labeling,
    incomparability_graph,
)
from ridom.lab.scans import (
    check_family_formulas,
    cycle_value,
    find_extremal,
    multipartite_part_vectors,
    path_value,
    scan_characterization,
    scan_corollary,
    scan_lemmas,
    scan_nordhaus_gaddum,
    scan_oracle_equivalence,
    scan_table_agreement,
    scan_trees,
    scan_wu_xing,
)
from ridom.lab.table import complement_mask, labeled_rik_table
from ridom.solvers import (
    independent_domination_number,
    independent_rainbow_domination_number,
    solve_rik,
    verify_rik,
)
from strategies import graphs


# -- corpora -------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(0, 6))
def test_labeled_graphs_complete_and_distinct(n):
    items = list(labeled_graphs(n))
    assert len(items) == 1 << (n * (n - 1) // 2)
    masks = [m for m, _ in items]
    assert sorted(masks) == list(range(len(items)))
    for mask, g in items[:200]:
        assert g == from_edge_mask(n, mask)


def test_labeled_graphs_range():
    with pytest.raises(ValueError):
        next(labeled_graphs(8))


def test_prufer_known_code():
    t = prufer_decode([3, 3, 3, 4], 6)
    assert sorted(t.edges()) == [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]


@pytest.mark.parametrize("n", range(2, 7))
def test_prufer_bijection(n):
    trees = list(enumerate_trees(n))
    assert len(trees) == n ** (n - 2)
    assert all(is_tree(t) for t in trees)
    codes = [prufer_encode(t) for t in trees]
    assert len(set(codes)) == len(codes)
    assert all(prufer_decode(c, n) == t for c, t in zip(codes, trees))


def test_prufer_errors():
    with pytest.raises(ValueError):
        prufer_decode([0], 4)
    with pytest.raises(ValueError):
        prufer_decode([7], 3)
    with pytest.raises(ValueError):
        prufer_encode(cycle_graph(4))


def test_random_trees_reproducible():
    a = [t.adj for t in random_trees(10, 20, seed=3)]
    b = [t.adj for t in random_trees(10, 20, seed=3)]
    assert a == b and all(is_tree(t) for t in random_trees(10, 20, seed=3))


@pytest.mark.parametrize("n", range(2, 9))
def test_certificates_count_unlabelled_trees(n):
    certs = {tree_certificate(t) for t in enumerate_trees(n)}
    assert len(certs) == sum(1 for _ in nx.nonisomorphic_trees(n))


def test_certificate_is_relabelling_invariant():
    rng = random.Random(1)
    for t in random_trees(12, 50, seed=5):
        perm = list(range(12))
        rng.shuffle(perm)
        relabelled = from_edge_list(12, [(perm[u], perm[v]) for u, v in t.edges()])
        assert tree_certificate(relabelled) == tree_certificate(t)


def test_read_corpus(tmp_path):
    path = tmp_path / "c.g6"
    path.write_text(">>graph6<<D??\nDhc\n")
    graphs = read_corpus(path, 5)
    assert graphs[1] == cycle_graph(5)
    with pytest.raises(GraphError, match="order"):
        read_corpus(path, 4)
    with pytest.raises(GraphError):
        read_corpus(tmp_path / "missing.g6")


# -- vectorised table ------------------------------------------------------------------

@pytest.mark.parametrize("n,k", [(n, k) for n in range(0, 5) for k in (1, 2, 3)])
def test_table_matches_brute_force(n, k):
    table = labeled_rik_table(n, k)
    for mask, g in labeled_graphs(n):
        assert table[mask] == brute_rik(n, edge_set(g), k)


def test_table_matches_solver_order6():
    assert scan_table_agreement(6, 2).ok


def test_complement_mask():
    assert complement_mask(0, 5) == (1 << 10) - 1
    for mask in (0, 5, 77, 1023):
        g = from_edge_mask(5, mask)
        assert from_edge_mask(5, complement_mask(mask, 5)).num_edges() == 10 - g.num_edges()


# -- fixtures --------------------------------------------------------------------------

def test_incomparability_fixtures():
    s7 = star_graph(7)
    assert solve_rik(s7, 3).value == 6
    assert independent_rainbow_domination_number(s7, 3).value == 3
    g = incomparability_graph()
    assert solve_rik(g, 3).value == 3
    assert independent_rainbow_domination_number(g, 3).value == 4


@pytest.mark.parametrize("graph,labeling", [(figure2_left, figure2_left_labeling),
                                            (figure2_right, figure2_right_labeling)])
def test_figure2_fixtures(graph, labeling):
    g, f = graph(), labeling()
    assert verify_rik(g, f)
    value = solve_rik(g, 2).value
    assert f.weight == value == independent_domination_number(g).value


# -- single-graph checks -----------------------------------------------------------------

def test_tree_checks():
    for t in (path_graph(2), path_graph(7), star_graph(6)):
        assert checks.check_tree_theorem(t)
        assert checks.check_leaf_lemmas(t)
    with pytest.raises(GraphError):
        checks.check_tree_theorem(cycle_graph(4))
    with pytest.raises(GraphError):
        checks.check_leaf_lemmas(from_edge_list(1, []))


def test_leaf_observation():
    assert checks.check_leaf_observation(path_graph(5))
    assert checks.check_leaf_observation(cycle_graph(5))
    with pytest.raises(GraphError):
        checks.check_leaf_observation(empty_graph(2))


def test_components_lemma():
    assert checks.check_components_lemma(disjoint_union(complete_graph(2), empty_graph(3)))
    assert checks.check_components_lemma(path_graph(3))
    assert checks.rik2(path_graph(3)) < 3


def test_star_lemma():
    assert checks.is_star_or_star_plus(star_graph(5))
    assert checks.is_star_or_star_plus(star_plus_graph(5))
    assert not checks.is_star_or_star_plus(complete_graph(4))
    assert checks.check_star_lemma(star_plus_graph(6))
    assert checks.check_star_lemma(complete_graph(5))
    with pytest.raises(GraphError):
        checks.check_star_lemma(path_graph(2))


def test_corollary():
    assert checks.check_corollary_independence(cycle_graph(4), 2)
    assert checks.check_corollary_independence(path_graph(5), 2)


def test_nordhaus_gaddum_record():
    r = checks.check_nordhaus_gaddum(cycle_graph(5))
    assert (r.value, r.complement_value, r.sum) == (4, 4, 8)
    assert r.attains_upper and r.within_bounds and not r.attains_lower
    with pytest.raises(GraphError):
        checks.check_nordhaus_gaddum(path_graph(2))


@given(graphs(min_n=3, max_n=7))
@settings(max_examples=60, deadline=None)
def test_nordhaus_gaddum_random(g):
    assert checks.check_nordhaus_gaddum(g).within_bounds


# -- scans ---------------------------------------------------------------------------------

def test_closed_forms():
    assert [path_value(n) for n in range(2, 9)] == [2, 2, 3, 3, 4, 4, 5]
    assert [cycle_value(n) for n in range(3, 11)] == [2, 2, 4, 4, 4, 4, 6, 6]
    for n in range(3, 11):
        assert cycle_value(n) == solve_rik(cycle_graph(n), 2).value


def test_multipartite_vectors():
    vectors = list(multipartite_part_vectors(7))
    assert vectors == [(2, 2), (2, 2, 2), (2, 2, 3), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)]


def test_family_scan_small():
    report = check_family_formulas(8)
    assert report.ok and report.graphs > 20
    labels = {r.label for r in report.records}
    assert {"starplus:5", "kmulti:2,3", "cycle:8"} <= labels
    with pytest.raises(ValueError):
        check_family_formulas(4)


def test_ng_scan_small():
    r3 = scan_nordhaus_gaddum(3)
    assert r3.ok and r3.graphs == 8 and len(r3.attainers["lower"]) == 8
    r5 = scan_nordhaus_gaddum(5)
    assert r5.ok and not r5.attainers["lower"]
    assert to_graph6_str(cycle_graph(5)) in r5.attainers["upper"]
    assert len(r5.attainers["upper"]) == 12   # 4!/2 labelled copies of C5


def test_ng_table_engine_matches_solver():
    a = scan_nordhaus_gaddum(5, engine="table")
    b = scan_nordhaus_gaddum(5)
    assert a.ok and a.graphs == b.graphs and a.attainers == b.attainers
    hist = Counter(r.invariants["sum"] for r in b.records)
    assert a.notes["sum_histogram"] == dict(hist)


def test_ng_scan_arguments():
    with pytest.raises(ValueError):
        scan_nordhaus_gaddum(2)
    with pytest.raises(ValueError):
        scan_nordhaus_gaddum(8)
    with pytest.raises(ValueError):
        scan_nordhaus_gaddum(4, engine="magic")


def test_find_extremal_on_atlas(tmp_path):
    # all 34 unlabelled graphs on 5 vertices from networkx's atlas
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 5]
    assert len(atlas) == 34
    path = tmp_path / "atlas5.g6"
    path.write_bytes(b"".join(nx.to_graph6_bytes(g, header=False) for g in atlas))
    report = find_extremal(5, "upper", source=path)
    assert report.ok and report.graphs == 34
    assert len(report.attainers["upper"]) == 1
    (only,) = report.attainers["upper"]
    c5 = parse_graph6(only)
    assert c5.num_edges() == 5 and set(c5.degrees()) == {2}


def test_tree_scan_small():
    report = scan_trees(max_full=7, sample_orders=(10,), samples=200, seed=1)
    assert report.ok
    assert report.notes["full:7"] == {"labeled_trees": 7 ** 5, "classes": 11}
    assert report.notes["sample:10"]["labeled_trees"] == 200
    assert report.graphs == sum(n ** (n - 2) for n in range(2, 8)) + 200


def test_small_scans():
    assert scan_lemmas(4).ok
    corollary = scan_corollary(4)
    assert corollary.ok and corollary.notes["premise_holds"] > 0
    assert scan_oracle_equivalence(4).ok
    assert scan_characterization(5).ok
    assert scan_wu_xing(4).ok


def test_scan_sink_and_summary():
    seen = []
    report = scan_lemmas(3, sink=seen.append)
    assert len(seen) == report.graphs == 8
    summary = report.summary()
    assert summary["counterexamples"] == 0 and summary["checks"] == report.checks
    assert "graph6" in seen[0].to_dict()
