from __future__ import annotations

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given, settings

from edgebetti.families import star
from edgebetti.graph import edgeless, from_edges
from edgebetti.graph6 import Graph6Error, emit_graph6, parse_graph6


def test_known_strings():
    assert emit_graph6(edgeless(0)) == "?"
    assert emit_graph6(from_edges(2, [(0, 1)])) == "A_"
    # star centred at the last vertex
    assert parse_graph6("D?{").edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert emit_graph6(star(3)) == "Cs"


def test_header_accepted():
    assert parse_graph6(">>graph6<<A_") == from_edges(2, [(0, 1)])


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=0, max_n=12))
def test_round_trip_and_networkx_agree(G):
    s = emit_graph6(G)
    assert parse_graph6(s) == G
    H = nx.from_graph6_bytes(s.encode())
    assert sorted(tuple(sorted(e)) for e in H.edges()) == G.edges()
    assert nx.to_graph6_bytes(H, header=False).strip().decode() == s


def test_long_form_parse():
    H = nx.path_graph(70)
    G = parse_graph6(nx.to_graph6_bytes(H, header=False).decode())
    assert G.n == 70 and G.num_edges == 69
    with pytest.raises(Graph6Error):
        emit_graph6(G)


@pytest.mark.parametrize("bad", ["", "A", "A_?", "B\x7f", "A`"])
def test_malformed_rejected(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_single_vertex():
    assert emit_graph6(edgeless(1)) == "@"


def test_round_trip_on_enumerated_streams():
    from edgebetti.verify import enumerate_connected_bipartite, enumerate_graphs, enumerate_trees
    streams = [enumerate_graphs(n) for n in range(1, 8)]
    streams += [enumerate_connected_bipartite(8), enumerate_trees(8)]
    for stream in streams:
        for s, G in zip(stream.graph6(), stream):
            assert parse_graph6(s) == G and emit_graph6(parse_graph6(s)) == s
