"""Labeled simple graphs on vertices 0..n-1 stored as adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels

CANONICAL_LIMIT = 10


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex."""


def bits(x: int) -> Iterator[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {u} has a neighbour >= n")
            if (row >> u) & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> set[int]:
        return set(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs, ordered lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def adj_array(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.int64)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError("negative vertex count")
    adj = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_masks(adj: Iterable[int]) -> Graph:
    adj = tuple(int(a) for a in adj)
    return Graph(len(adj), adj)


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def _check_vertices(G: Graph, W: Iterable[int]) -> list[int]:
    W = sorted(set(W))
    for w in W:
        if not 0 <= w < G.n:
            raise GraphError(f"vertex {w} not in graph on {G.n} vertices")
    return W


def induced_subgraph(G: Graph, W: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on W relabeled to 0..|W|-1.

    Returns the graph and the map new label -> old label.
    """
    W = _check_vertices(G, W)
    index = {w: i for i, w in enumerate(W)}
    wm = to_mask(W)
    adj = tuple(to_mask(index[u] for u in bits(G.adj[w] & wm)) for w in W)
    return Graph(len(W), adj), W


def delete_vertices(G: Graph, X: Iterable[int]) -> Graph:
    X = set(_check_vertices(G, X))
    return induced_subgraph(G, [v for v in range(G.n) if v not in X])[0]


def delete_closed_neighborhood(G: Graph, x: int) -> Graph:
    _check_vertices(G, [x])
    return delete_vertices(G, G.neighbors(x) | {x})


def complement(G: Graph) -> Graph:
    full = G.vertex_mask
    return Graph(G.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(G.adj)))


def connected_components(G: Graph) -> list[set[int]]:
    seen = 0
    comps = []
    for s in range(G.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(set(bits(comp)))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(connected_components(G)) == 1


@dataclass(frozen=True)
class Bipartition:
    sideA: frozenset[int]
    sideB: frozenset[int]


def bipartition(G: Graph) -> Bipartition | None:
    """Two-colouring with each component's smallest vertex on side A,
    or None when G has an odd cycle."""
    colour = [-1] * G.n
    for s in range(G.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(G.adj[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return Bipartition(
        frozenset(v for v in range(G.n) if colour[v] == 0),
        frozenset(v for v in range(G.n) if colour[v] == 1),
    )


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def is_forest(G: Graph) -> bool:
    return all(
        sum(G.degree(v) for v in comp) // 2 == len(comp) - 1
        for comp in connected_components(G)
    )


def is_tree(G: Graph) -> bool:
    return is_connected(G) and is_forest(G)


def is_chordal(G: Graph) -> bool:
    return bool(kernels.is_chordal_masks(G.adj_array()))


def is_cochordal(G: Graph) -> bool:
    return is_chordal(complement(G))


def is_complete_bipartite(G: Graph) -> bool:
    """True for K_{a,b} with a, b >= 1 (no isolated vertices)."""
    bp = bipartition(G)
    if bp is None or not bp.sideA or not bp.sideB:
        return False
    A, B = to_mask(bp.sideA), to_mask(bp.sideB)
    return all(G.adj[a] == B for a in bp.sideA) and all(G.adj[b] == A for b in bp.sideB)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return Graph(G.n + H.n, G.adj + tuple(a << shift for a in H.adj))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex i is G's vertex perm[i]."""
    inv = {old: new for new, old in enumerate(perm)}
    return Graph(G.n, tuple(to_mask(inv[u] for u in bits(G.adj[old])) for old in perm))


def canonical_graph(G: Graph, limit: int = CANONICAL_LIMIT) -> Graph:
    if G.n > limit:
        raise GraphError(f"canonical form limited to n <= {limit}, got {G.n}")
    if G.n == 0:
        return G
    return relabel(G, [int(v) for v in kernels.canonical_perm(G.adj_array())])


def canonical_form(G: Graph, limit: int = CANONICAL_LIMIT) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic.

    The graph6 encoding of the relabeling that minimises the adjacency
    bit string over degree-class-respecting vertex orders.
    """
    from .graph6 import emit_graph6

    return emit_graph6(canonical_graph(G, limit)).encode("ascii")

