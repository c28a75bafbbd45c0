"""Acceptance criteria, one test per criterion; each prints a PASS/FAIL line."""

from __future__ import annotations

import random
import time

from edgebetti.families import complete_bipartite, cycle, main_theorem_set, witness
from edgebetti.graph import is_cochordal, is_connected
from edgebetti.homology import (
    FieldSpec,
    SimplicialComplex,
    euler_characteristic,
    pd_reg,
    reduced_homology_ranks,
    terai_pd_oracle,
)
from edgebetti.invariants import (
    induced_matching_number,
    matching_cover_witness,
    matching_number,
    tau_max,
)
from edgebetti.verify import (
    audit_stream,
    check_main_theorem,
    check_tree_theorem,
    enumerate_connected_bipartite,
    enumerate_graphs,
    enumerate_trees,
    summarize,
)


def test_criterion_01_main_theorem(criterion):
    parts, ok = [], True
    for n in range(4, 9):
        t = time.perf_counter()
        rep = check_main_theorem(n)
        dt = time.perf_counter() - t
        budget = 10.0 if n <= 7 else 300.0
        ok &= rep.passed and dt < budget
        parts.append(f"n={n} {'ok' if rep.passed else 'MISMATCH'} {dt:.1f}s")
    criterion(ok, "realized == predicted over connected bipartite graphs; " + ", ".join(parts))


def test_criterion_02_trees(criterion):
    t = time.perf_counter()
    bad = [n for n in range(4, 10) if not check_tree_theorem(n).passed]
    dt = time.perf_counter() - t
    criterion(not bad and dt < 120, f"trees n=4..9, mismatches at {bad}, {dt:.1f}s total (< 120s)")


def test_criterion_03_witnesses(criterion):
    t = time.perf_counter()
    checked, bad = 0, []
    for n in range(4, 13):
        for p, r in main_theorem_set(n):
            checked += 1
            if pd_reg(witness(n, p, r).graph) != (p, r):
                bad.append((n, p, r))
    dt = time.perf_counter() - t
    criterion(not bad and dt < 600, f"{checked} witnesses n=4..12, failures {bad}, {dt:.1f}s (< 600s)")


def test_criterion_04_forest_oracle(criterion):
    checked, bad = 0, []
    for n in range(2, 10):
        for T in enumerate_trees(n):
            checked += 1
            if pd_reg(T) != (tau_max(T), induced_matching_number(T)):
                bad.append(T)
    criterion(not bad, f"(pd, reg) == (tau_max, indm) on {checked} trees n<=9, {len(bad)} mismatches")


def test_criterion_05_complete_bipartite(criterion):
    bad = [(a, b) for a in range(1, 10) for b in range(a, 11 - a)
           if pd_reg(complete_bipartite(a, b)) != (a + b - 1, 1)]
    criterion(not bad, f"K_(a,b), a+b<=10: pd = a+b-1 and reg = 1, failures {bad}")


def test_criterion_06_bound_audit(criterion):
    reports = []
    for n in range(2, 9):
        reports += audit_stream(enumerate_connected_bipartite(n))
    for n in range(2, 10):
        reports += audit_stream(enumerate_trees(n))
    summary = summarize(reports)
    failed = {k: b for k, (a, b) in summary.items() if b}
    coc_checks = summary.get("reg_le_coc", (0, 0))[0]
    criterion(not failed and coc_checks > 0,
              f"{len(reports)} graphs, {sum(a for a, _ in summary.values())} checks "
              f"({coc_checks} with coc), failures {failed}")


def test_criterion_07_even_cover(criterion):
    checked, bad = 0, []
    for n in (4, 6, 8):
        for G in enumerate_graphs(n, connected=True):
            if matching_number(G) != n // 2:
                continue
            checked += 1
            parts = matching_cover_witness(G)
            covered = set().union(*(set(H.edges()) for H in parts))
            if len(parts) != n // 2 - 1 or covered != set(G.edges()) or not all(map(is_cochordal, parts)):
                bad.append(G)
    criterion(not bad, f"{checked} connected graphs with perfect matchings, n in 4,6,8: {len(bad)} failures")


def test_criterion_08_terai(criterion):
    checked, bad = 0, []
    for n in range(2, 9):
        for G in enumerate_graphs(n, connected=True):
            checked += 1
            if terai_pd_oracle(G) != pd_reg(G)[0]:
                bad.append(G)
    criterion(not bad, f"reg of cover ideal == pd on {checked} connected graphs n<=8, {len(bad)} mismatches")


def test_criterion_09_c5(criterion):
    C5 = cycle(5)
    got = pd_reg(C5)
    indm = induced_matching_number(C5)
    dual = terai_pd_oracle(C5)
    criterion(got == (3, 2) and indm == 1 and dual == 3 and is_connected(C5),
              f"C5: (pd, reg) = {got}, indm = {indm}, dual reg = {dual}")


def _h(K: SimplicialComplex) -> dict[int, int]:
    return {d - 1: int(h) for d, h in enumerate(reduced_homology_ranks(K)) if h}


def test_criterion_10_homology(criterion):
    micro = {
        "hollow triangle": (_h(SimplicialComplex.from_facets(3, [[0, 1], [1, 2], [0, 2]])), {1: 1}),
        "two points": (_h(SimplicialComplex.from_facets(2, [[0], [1]])), {0: 1}),
        "full simplex": (_h(SimplicialComplex.from_facets(4, [[0, 1, 2, 3]])), {}),
        "{empty}": (_h(SimplicialComplex.from_facets(0, [0])), {-1: 1}),
    }
    micro_bad = [k for k, (got, want) in micro.items() if got != want]
    rng = random.Random(2024)
    euler_bad = 0
    for _ in range(1000):
        n = rng.randint(1, 9)
        K = SimplicialComplex.from_facets(n, [rng.getrandbits(n) for _ in range(rng.randint(1, 6))])
        R = K.restrict(rng.getrandbits(n))
        ranks = reduced_homology_ranks(R, FieldSpec(2))
        if sum((-1) ** (d - 1) * int(h) for d, h in enumerate(ranks)) != euler_characteristic(R):
            euler_bad += 1
    criterion(not micro_bad and not euler_bad,
              f"micro-oracles failing {micro_bad}; Euler mismatches {euler_bad}/1000")
