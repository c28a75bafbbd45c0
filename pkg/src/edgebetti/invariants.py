"""Exact combinatorial invariants: matching numbers, tau_max, co-chordal covers."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import kernels
from .graph import (
    Graph,
    bits,
    is_bipartite,
    is_cochordal,
    is_connected,
    is_forest,
    to_mask,
)

COC_MAX_EDGES = 24
COC_DEFAULT_MAX_N = 8


def maximum_matching(G: Graph) -> list[tuple[int, int]]:
    """A maximum matching found by branch and bound.

    Branches on the lowest vertex that still has a free neighbour, trying
    its edges in increasing order before leaving it unmatched.
    """
    best: list[tuple[int, int]] = []
    chosen: list[tuple[int, int]] = []

    def search(avail: int) -> None:
        nonlocal best
        if len(chosen) + avail.bit_count() // 2 <= len(best):
            return
        v = next((v for v in bits(avail) if G.adj[v] & avail), None)
        if v is None:
            if len(chosen) > len(best):
                best = chosen[:]
            return
        for u in bits(G.adj[v] & avail):
            chosen.append((v, u))
            search(avail & ~(1 << v) & ~(1 << u))
            chosen.pop()
        search(avail & ~(1 << v))

    search(G.vertex_mask)
    return best


def matching_number(G: Graph) -> int:
    return len(maximum_matching(G))


def maximum_induced_matching(G: Graph) -> list[tuple[int, int]]:
    """Taking edge uv removes N[u] and N[v] from play, so no later edge can
    touch or be joined to it."""
    best: list[tuple[int, int]] = []
    chosen: list[tuple[int, int]] = []
    closed = [a | (1 << v) for v, a in enumerate(G.adj)]

    def search(avail: int) -> None:
        nonlocal best
        if len(chosen) + avail.bit_count() // 2 <= len(best):
            return
        v = next((v for v in bits(avail) if G.adj[v] & avail), None)
        if v is None:
            if len(chosen) > len(best):
                best = chosen[:]
            return
        for u in bits(G.adj[v] & avail):
            chosen.append((v, u))
            search(avail & ~closed[v] & ~closed[u])
            chosen.pop()
        search(avail & ~(1 << v))

    search(G.vertex_mask)
    return best


def induced_matching_number(G: Graph) -> int:
    return len(maximum_induced_matching(G))


def maximal_independent_sets(G: Graph) -> Iterator[int]:
    """Bron-Kerbosch with pivoting on the complement; yields vertex masks."""
    full = G.vertex_mask
    comp = [full & ~a & ~(1 << v) for v, a in enumerate(G.adj)]

    def bk(R: int, P: int, X: int) -> Iterator[int]:
        if not P and not X:
            yield R
            return
        pivot = max(bits(P | X), key=lambda u: (comp[u] & P).bit_count())
        for v in bits(P & ~comp[pivot]):
            yield from bk(R | (1 << v), P & comp[v], X & comp[v])
            P &= ~(1 << v)
            X |= 1 << v

    if G.n == 0:
        yield 0
        return
    yield from bk(0, full, 0)


def tau_max(G: Graph) -> int:
    """Largest minimal vertex cover: the complements of maximal independent
    sets are exactly the minimal covers."""
    return G.n - min(m.bit_count() for m in maximal_independent_sets(G))


def _cochordal_masks(G: Graph) -> tuple[list[tuple[int, int]], np.ndarray]:
    edges = G.edges()
    if len(edges) > COC_MAX_EDGES:
        raise ValueError(f"co-chordal search limited to {COC_MAX_EDGES} edges, got {len(edges)}")
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    state = kernels.cochordal_table(G.n, eu, ev)
    return edges, np.asarray(state) == 1


def maximal_cochordal_edge_sets(G: Graph) -> list[int]:
    """Inclusion-maximal co-chordal edge subsets, as masks over G.edges().

    A co-chordal set with a co-chordal superset also has a co-chordal
    one-edge extension, so maximality is checked one edge at a time.
    """
    edges, ok = _cochordal_masks(G)
    m = len(edges)
    idx = np.flatnonzero(ok).astype(np.int64)
    maximal = np.ones(idx.shape, dtype=bool)
    for e in range(m):
        free = ((idx >> e) & 1) == 0
        maximal &= ~(free & ok[idx | (1 << e)])
    out = [int(x) for x in idx[maximal] if x]
    return sorted(out, key=lambda x: (-x.bit_count(), x))


def cochordal_cover(G: Graph, limit: int | None = None) -> list[Graph] | None:
    """A minimum cover of E(G) by co-chordal subgraphs, or None if more
    than ``limit`` parts are needed.

    Iterative deepening over covers built from maximal co-chordal edge
    sets, branching on the lowest uncovered edge.
    """
    edges = G.edges()
    if not edges:
        return []
    if limit is None:
        limit = len(edges)
    sets = maximal_cochordal_edge_sets(G)
    m = len(edges)
    containing = [[s for s in sets if (s >> e) & 1] for e in range(m)]

    @lru_cache(maxsize=None)
    def cover(uncovered: int, r: int) -> tuple[int, ...] | None:
        if not uncovered:
            return ()
        if r == 0:
            return None
        e = (uncovered & -uncovered).bit_length() - 1
        for s in containing[e]:
            rest = cover(uncovered & ~s, r - 1)
            if rest is not None:
                return (s,) + rest
        return None

    full = (1 << m) - 1
    for r in range(1, limit + 1):
        found = cover(full, r)
        if found is not None:
            return [_edge_subgraph(G, [edges[e] for e in bits(s)]) for s in found]
    return None


def cochordal_cover_number(G: Graph, limit: int | None = None) -> int | None:
    """coc(G), or None when it exceeds ``limit``."""
    found = cochordal_cover(G, limit)
    return None if found is None else len(found)


def _edge_subgraph(G: Graph, edges: list[tuple[int, int]]) -> Graph:
    adj = [0] * G.n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(G.n, tuple(adj))


def matching_cover_witness(G: Graph) -> list[Graph]:
    """Explicit cover of a connected graph with a perfect matching on
    n >= 4 (n even) vertices by n/2 - 1 co-chordal subgraphs.

    Order the perfect matching so an edge joins e1 and e2.  The first part
    is G induced on e1 | e2; part i (i >= 2) holds every edge meeting
    e_{i+1}.
    """
    n = G.n
    if n < 4 or n % 2:
        raise ValueError("need an even number of vertices, at least 4")
    if not is_connected(G):
        raise ValueError("graph must be connected")
    M = maximum_matching(G)
    if len(M) != n // 2:
        raise ValueError("graph has no perfect matching")
    owner = {}
    for k, (u, v) in enumerate(M):
        owner[u] = owner[v] = k
    a, b = next((owner[u], owner[v]) for u, v in G.edges() if owner[u] != owner[v])
    order = [M[a], M[b]] + [e for k, e in enumerate(M) if k not in (a, b)]
    e1, e2 = order[0], order[1]
    inside = to_mask(e1 + e2)
    edges = G.edges()
    parts = [[e for e in edges if to_mask(e) & ~inside == 0]]
    for e in order[2:]:
        em = to_mask(e)
        parts.append([f for f in edges if to_mask(f) & em])
    graphs = [_edge_subgraph(G, p) for p in parts]
    covered = set().union(*(set(p) for p in parts))
    if covered != set(edges):
        raise RuntimeError("matching cover does not cover every edge")
    for H in graphs:
        if not is_cochordal(H):
            raise RuntimeError(f"matching cover part {H.edges()} is not co-chordal")
    return graphs


@dataclass
class InvariantReport:
    n: int
    num_edges: int
    mat: int
    indm: int
    tau_max: int
    coc: int | None
    connected: bool
    bipartite: bool
    forest: bool
    isolated_free: bool

    def to_dict(self) -> dict:
        return asdict(self)


def invariant_report(G: Graph, coc_max_n: int = COC_DEFAULT_MAX_N) -> InvariantReport:
    coc = cochordal_cover_number(G) if G.n <= coc_max_n else None
    return InvariantReport(
        n=G.n,
        num_edges=G.num_edges,
        mat=matching_number(G),
        indm=induced_matching_number(G),
        tau_max=tau_max(G),
        coc=coc,
        connected=is_connected(G),
        bipartite=is_bipartite(G),
        forest=is_forest(G),
        isolated_free=not G.isolated_vertices(),
    )
