from __future__ import annotations

import random

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given, settings

import oracles
from edgebetti.graph import (
    Graph,
    GraphError,
    bipartition,
    canonical_form,
    canonical_graph,
    complement,
    connected_components,
    delete_closed_neighborhood,
    delete_vertices,
    disjoint_union,
    edgeless,
    from_edges,
    induced_subgraph,
    is_bipartite,
    is_chordal,
    is_cochordal,
    is_complete_bipartite,
    is_connected,
    is_forest,
    is_tree,
    relabel,
)
from edgebetti.families import complete_bipartite, cycle, path


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def test_from_edges_rejects_loops_and_range():
    with pytest.raises(GraphError):
        from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        from_edges(3, [(0, 3)])


def test_graph_validates_symmetry():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_edges_sorted_and_deduplicated():
    G = from_edges(4, [(3, 1), (0, 2), (1, 3), (2, 0)])
    assert G.edges() == [(0, 2), (1, 3)]
    assert G.num_edges == 2
    assert G.degree(1) == 1 and G.neighbors(0) == {2}


def test_isolated_vertices():
    assert from_edges(4, [(0, 1)]).isolated_vertices() == [2, 3]


def test_induced_subgraph_relabels_in_order():
    G = cycle(5)
    H, vmap = induced_subgraph(G, [4, 0, 1])
    assert vmap == [0, 1, 4]
    assert H.edges() == [(0, 1), (0, 2)]


def test_vertex_deletions():
    P = path(5)
    assert delete_vertices(P, [2]).edges() == [(0, 1), (2, 3)]
    assert delete_closed_neighborhood(P, 2).edges() == []
    assert delete_closed_neighborhood(P, 0).n == 3


def test_components_and_connectivity():
    G = disjoint_union(path(3), path(2))
    assert connected_components(G) == [{0, 1, 2}, {3, 4}]
    assert not is_connected(G)
    assert is_connected(path(1))
    assert not is_connected(edgeless(0))


def test_structure_predicates():
    assert is_tree(path(6)) and is_forest(disjoint_union(path(2), path(3)))
    assert not is_forest(cycle(4))
    assert is_bipartite(cycle(6)) and not is_bipartite(cycle(5))
    part = bipartition(cycle(4))
    assert part is not None and {frozenset(part.sideA), frozenset(part.sideB)} == {
        frozenset({0, 2}), frozenset({1, 3})}
    assert bipartition(cycle(3)) is None
    assert is_complete_bipartite(complete_bipartite(2, 3))
    assert not is_complete_bipartite(path(4)) and is_complete_bipartite(path(3))
    assert is_complete_bipartite(cycle(4))


def test_chordality_on_known_graphs():
    assert is_chordal(cycle(3)) and not is_chordal(cycle(4))
    # complement of C4 is 2K2, chordal; so C4 is co-chordal
    assert is_cochordal(cycle(4))
    # 2K2 is not co-chordal: its complement is C4
    assert not is_cochordal(from_edges(4, [(0, 1), (2, 3)]))
    assert not is_cochordal(cycle(6))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_chordal_matches_induced_cycle_oracle(G):
    assert is_chordal(G) == oracles.is_chordal(G)
    assert is_chordal(G) == nx.is_chordal(to_nx(G))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_predicates_match_networkx(G):
    H = to_nx(G)
    assert is_bipartite(G) == nx.is_bipartite(H)
    assert is_forest(G) == nx.is_forest(H)
    if G.n:
        assert is_connected(G) == nx.is_connected(H)
    assert complement(complement(G)) == G


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_canonical_form_is_isomorphism_invariant(G):
    perm = list(range(G.n))
    random.Random(G.num_edges).shuffle(perm)
    H = relabel(G, perm)
    assert canonical_form(G) == canonical_form(H)
    C = canonical_graph(G)
    assert nx.is_isomorphic(to_nx(C), to_nx(G))


def test_canonical_form_separates_non_isomorphic():
    # same degree sequence, different graphs
    a = from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    b = cycle(6)
    assert canonical_form(a) != canonical_form(b)


def test_canonical_form_limit():
    with pytest.raises(GraphError):
        canonical_form(edgeless(11))
