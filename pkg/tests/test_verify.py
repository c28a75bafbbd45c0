from __future__ import annotations

import json

import networkx as nx
import pytest

from edgebetti.families import main_theorem_set, tree_theorem_set
from edgebetti.graph import canonical_form, is_bipartite, is_tree
from edgebetti.graph6 import parse_graph6
from edgebetti.homology import FieldSpec
from edgebetti.verify import (
    AuditReport,
    EnumerationError,
    audit_bounds,
    audit_stream,
    characteristic_comparison,
    check_main_theorem,
    check_tree_theorem,
    enumerate_connected_bipartite,
    enumerate_graphs,
    enumerate_trees,
    format_summary,
    realized_set,
    summarize,
)
from edgebetti.families import cycle, disjoint_edges, path

CONNECTED_BIPARTITE = {2: 1, 3: 1, 4: 3, 5: 5, 6: 17, 7: 44, 8: 182}
TREES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}
ALL_GRAPHS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n, count", CONNECTED_BIPARTITE.items())
def test_connected_bipartite_counts(n, count):
    stream = enumerate_connected_bipartite(n)
    assert len(stream) == count
    assert len({canonical_form(G) for G in stream}) == count


@pytest.mark.parametrize("n, count", TREES.items())
def test_tree_counts(n, count):
    stream = enumerate_trees(n)
    assert len(stream) == count
    assert all(is_tree(G) for G in stream)


@pytest.mark.parametrize("n", ALL_GRAPHS)
def test_all_graph_counts(n):
    assert len(enumerate_graphs(n)) == ALL_GRAPHS[n]
    assert len(enumerate_graphs(n, connected=True)) == CONNECTED[n]


@pytest.mark.parametrize("n", range(2, 7))
def test_bipartite_enumeration_agrees_with_generic_growth(n):
    """Two independent generators must produce the same classes."""
    sweep = {canonical_form(G) for G in enumerate_connected_bipartite(n)}
    grown = {canonical_form(G) for G in enumerate_graphs(n, connected=True) if is_bipartite(G)}
    assert sweep == grown


@pytest.mark.parametrize("n", range(2, 9))
def test_trees_match_networkx(n):
    ours = {canonical_form(G) for G in enumerate_trees(n)}
    theirs = set()
    for T in nx.nonisomorphic_trees(n):
        s = nx.to_graph6_bytes(T, header=False).strip().decode()
        theirs.add(canonical_form(parse_graph6(s)))
    assert ours == theirs


def test_enumeration_ranges():
    with pytest.raises(EnumerationError):
        enumerate_connected_bipartite(10)
    with pytest.raises(EnumerationError):
        enumerate_trees(11)
    with pytest.raises(EnumerationError):
        enumerate_graphs(10)


def test_stream_order_is_deterministic():
    a = enumerate_connected_bipartite(6).graph6()
    assert a == sorted(a)
    assert a == enumerate_connected_bipartite(6).graph6()


@pytest.mark.parametrize("n", range(4, 8))
def test_main_and_tree_checks_pass(n):
    rep = check_main_theorem(n)
    assert rep.passed, rep.to_json()
    assert rep.verdicts[0].observed["graphs"] == CONNECTED_BIPARTITE[n]
    assert check_tree_theorem(n).passed


def test_realized_set_parallel_matches_serial():
    stream = enumerate_connected_bipartite(6)
    serial = realized_set(stream)
    parallel = realized_set(stream, jobs=2)
    assert serial.witnesses == parallel.witnesses
    assert serial == main_theorem_set(6)


def test_set_mismatch_is_reported():
    from edgebetti.verify import _compare_sets
    rep = _compare_sets("x", tree_theorem_set(8), main_theorem_set(8))
    assert not rep.passed
    obs = rep.verdicts[0].observed
    assert obs["missing"] == [[6, 3]] and obs["unexpected"] == []


def test_audit_bounds_on_small_graphs():
    for G in (cycle(6), path(7), disjoint_edges(2), cycle(5)):
        rep = audit_bounds(G)
        assert rep.passed, rep.to_json()
    names = {v.check for v in audit_bounds(disjoint_edges(2)).verdicts}
    assert "reg_additive_over_components" in names
    assert "even_reg_half_iff_disjoint_edges" in names


def test_audit_report_json_and_summary():
    reports = audit_stream(enumerate_trees(6))
    assert all(r.passed for r in reports)
    d = json.loads(reports[0].to_json())
    assert set(d) >= {"subject", "passed", "verdicts"}
    summary = summarize(reports)
    assert summary["forest_pd_eq_tau_max"] == (6, 0)
    assert "forest_reg_eq_indm" in format_summary(summary)


def test_failing_verdict_recorded():
    rep = AuditReport("g")
    rep.add("ok", True)
    rep.add("bad", False, value=3)
    assert not rep.passed and [v.check for v in rep.failures()] == ["bad"]


def test_characteristic_comparison():
    out = characteristic_comparison(cycle(5))
    assert out["agree"] and out["values"]["3"] == [3, 2]


def test_check_over_other_field():
    assert check_main_theorem(6, FieldSpec(3)).passed
