import networkx as nx
import pytest
from hypothesis import given

from oracles import edge_set, graph6_bits
from ridom.graph import GraphError, complete_graph, cycle_graph, empty_graph, from_edge_list, petersen_graph
from ridom.graph6 import emit_graph6, parse_graph6, read_graph6_lines
from ridom.lab.corpus import labeled_graphs
from strategies import graphs


def test_empty5_against_reference_encoder():
    g = empty_graph(5)
    reference = nx.to_graph6_bytes(nx.empty_graph(5), header=False).strip()
    assert reference == b"D??"
    assert emit_graph6(g) == reference
    parsed = parse_graph6(reference)
    assert parsed.n == 5 and parsed.num_edges() == 0


def test_hand_decoded_three_vertex_graph():
    # 'W' - 63 = 24 = 0b011000: x(0,1)=0, x(0,2)=1, x(1,2)=1, then zero padding.
    g = parse_graph6(b"BW")
    assert g == from_edge_list(3, [(0, 2), (1, 2)])


def test_header_and_str_input():
    assert parse_graph6(">>graph6<<BW\n") == parse_graph6("BW")


@given(graphs(max_n=10))
def test_matches_independent_encoders(g):
    ours = emit_graph6(g).decode()
    assert ours == graph6_bits(g.n, edge_set(g))
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    assert ours.encode() == nx.to_graph6_bytes(nxg, header=False).strip()


@given(graphs(max_n=12))
def test_roundtrip(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_roundtrip_all_labeled_order4():
    for _, g in labeled_graphs(4):
        assert parse_graph6(emit_graph6(g)) == g


def test_larger_orders():
    for g in (petersen_graph(), complete_graph(62), cycle_graph(40)):
        assert parse_graph6(emit_graph6(g)) == g


def test_order_limit():
    with pytest.raises(GraphError):
        emit_graph6(empty_graph(63))
    with pytest.raises(GraphError):
        parse_graph6(b"~?@?")


@pytest.mark.parametrize("data", [b"", b"B", b"BWW", b"B\x7f", b"D?", b"B " , b"BX"])
def test_malformed(data):
    with pytest.raises(GraphError):
        parse_graph6(data)


def test_nonzero_padding_rejected():
    # 'X' - 63 = 25 sets the last (padding) bit for n = 3.
    with pytest.raises(GraphError, match="padding"):
        parse_graph6(b"BX")


def test_read_lines_reports_line_number():
    assert len(read_graph6_lines(["BW", "", "D??"])) == 2
    with pytest.raises(GraphError, match="line 2"):
        read_graph6_lines(["BW", "B!"])
