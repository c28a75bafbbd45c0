from __future__ import annotations

import json

import pytest

from edgebetti.families import (
    FamilyError,
    PdRegSet,
    bipartite_family,
    complete_bipartite,
    main_theorem_set,
    tree_family,
    tree_theorem_set,
    witness,
)
from edgebetti.graph import is_bipartite, is_connected, is_tree
from edgebetti.graph6 import parse_graph6
from edgebetti.homology import pd_reg
from edgebetti.invariants import induced_matching_number, tau_max


def test_predicted_set_n7_order():
    assert str(main_theorem_set(7)) == "{(4,1),(5,1),(4,2),(5,2),(6,1),(4,3)}"


@pytest.mark.parametrize("n", range(4, 13))
def test_predicted_set_shape(n):
    s = main_theorem_set(n)
    half = (n + 1) // 2
    box = {(p, r) for r in range(1, n // 2) for p in range(half, n - 1)}
    extra = {(n - 1, 1)} | ({(half, n // 2)} if n % 2 else set())
    assert s.pairs == box | extra
    assert len(s) == len(box) + len(extra)


def test_tree_set_small():
    assert tree_theorem_set(4).pairs == {(2, 1), (3, 1)}
    assert tree_theorem_set(5).pairs == {(3, 1), (4, 1), (3, 2)}


def test_tree_set_inside_main_set():
    for n in range(4, 13):
        assert tree_theorem_set(n).pairs <= main_theorem_set(n).pairs


def test_sets_reject_small_n():
    with pytest.raises(FamilyError):
        main_theorem_set(3)
    with pytest.raises(FamilyError):
        tree_theorem_set(2)


def test_pdregset_behaviour():
    s = PdRegSet.of([(3, 2), (3, 1)])
    s.add((4, 1), "C]")
    s.add((4, 1), "other")
    assert s.witnesses[(4, 1)] == "C]"
    assert list(s) == [(3, 2), (3, 1), (4, 1)]
    assert s.sorted_pairs() == [(3, 1), (4, 1), (3, 2)]
    assert s == {(3, 1), (3, 2), (4, 1)}
    assert (3, 2) in s and [3, 2] in s
    with pytest.raises(ValueError):
        PdRegSet.of([(-1, 0)])


@pytest.mark.parametrize("n", range(4, 11))
def test_tree_family_combinatorics(n):
    for r in range(1, (n + 1) // 2):
        if 2 * r >= n:
            continue
        for p in range((n + 1) // 2, n - r + 1):
            m = tree_family(n, p, r)
            G = m.graph
            assert is_tree(G) and G.n == n
            assert (tau_max(G), induced_matching_number(G)) == (p, r)


def test_tree_family_range_checks():
    with pytest.raises(FamilyError):
        tree_family(6, 2, 1)
    with pytest.raises(FamilyError):
        tree_family(6, 5, 2)
    with pytest.raises(FamilyError):
        tree_family(6, 4, 3)


def test_bipartite_family():
    m = bipartite_family(9, 7, 3)
    assert m.params == {"a": 3, "t": 1}
    assert is_connected(m.graph) and is_bipartite(m.graph)
    assert pd_reg(m.graph) == (7, 3)
    with pytest.raises(FamilyError):
        bipartite_family(9, 6, 3)
    with pytest.raises(FamilyError):
        bipartite_family(7, 5, 2)


def test_witness_dispatch_and_manifest():
    assert witness(6, 5, 1).family == "complete_bipartite"
    assert witness(7, 4, 3).family == "tree"
    assert witness(10, 8, 4).family == "bipartite"
    d = json.loads(witness(7, 4, 3).to_json())
    assert d["claimed"] == {"pd": 4, "reg": 3}
    assert parse_graph6(d["graph6"]).edges() == [tuple(e) for e in d["edges"]]
    assert set(d["labels"].values()) >= {"x", "u_1", "v_1"}
    with pytest.raises(FamilyError):
        witness(8, 7, 3)


@pytest.mark.parametrize("n", range(4, 11))
def test_witnesses_realise_claims(n):
    for p, r in main_theorem_set(n):
        assert pd_reg(witness(n, p, r).graph) == (p, r)


def test_complete_bipartite_rejects_empty_side():
    with pytest.raises(FamilyError):
        complete_bipartite(0, 3)
