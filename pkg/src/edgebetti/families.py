"""Witness graph families and the closed-form (pd, reg) sets they realise."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import Graph, from_edges, is_bipartite, is_connected, is_tree
from .graph6 import emit_graph6


class FamilyError(ValueError):
    """Parameters outside a construction's valid range."""


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise FamilyError("both sides of K_{a,b} need at least one vertex")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(m: int) -> Graph:
    return complete_bipartite(1, m)


def disjoint_edges(k: int) -> Graph:
    if k < 1:
        raise FamilyError("need at least one edge")
    return from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise FamilyError("a cycle needs at least 3 vertices")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise FamilyError("a path needs at least 1 vertex")
    return from_edges(k, [(i, i + 1) for i in range(k - 1)])


@dataclass
class FamilyManifest:
    family: str
    graph: Graph
    labels: dict[int, str]
    claimed: tuple[int, int]
    params: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "labels": {str(v): name for v, name in sorted(self.labels.items())},
            "params": self.params,
            "claimed": {"pd": self.claimed[0], "reg": self.claimed[1]},
            "graph6": emit_graph6(self.graph),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


class _Builder:
    """Allocates named vertices in a fixed order and collects edges."""

    def __init__(self):
        self.labels: dict[int, str] = {}
        self.edges: list[tuple[int, int]] = []

    def block(self, name: str, k: int) -> list[int]:
        start = len(self.labels)
        for i in range(k):
            self.labels[start + i] = f"{name}_{i + 1}"
        return list(range(start, start + k))

    def single(self, name: str) -> int:
        v = len(self.labels)
        self.labels[v] = name
        return v

    def graph(self) -> Graph:
        return from_edges(len(self.labels), self.edges)


def tree_family(n: int, p: int, r: int) -> FamilyManifest:
    """Tree on n vertices with induced matching number r and tau_max p.

    Matching u_i v_i, a hub x joined to every v_i and to b leaves y_i, and
    t leaves z_i hanging off v_r, where b = n - r - p and t = p - r - 1.
    """
    if n < 4:
        raise FamilyError("tree family needs n >= 4")
    if not (1 <= r and 2 * r < n):
        raise FamilyError(f"need 1 <= r < n/2, got r={r}, n={n}")
    if not (_ceil_half(n) <= p <= n - r):
        raise FamilyError(f"need ceil(n/2) <= p <= n - r, got p={p}")
    a = n - 2 * r
    b = n - r - p
    t = p - r - 1
    bld = _Builder()
    u = bld.block("u", r)
    v = bld.block("v", r)
    x = bld.single("x")
    y = bld.block("y", b)
    z = bld.block("z", t)
    bld.edges += [(u[i], v[i]) for i in range(r)]
    bld.edges += [(x, v[i]) for i in range(r)]
    bld.edges += [(x, yi) for yi in y]
    bld.edges += [(v[r - 1], zi) for zi in z]
    G = bld.graph()
    if G.n != n or not is_tree(G):
        raise RuntimeError(f"tree family produced a bad graph for {(n, p, r)}")
    return FamilyManifest("tree", G, bld.labels, (p, r), {"a": a, "b": b, "t": t})


def bipartite_family(n: int, p: int, r: int) -> FamilyManifest:
    """Connected bipartite graph with reg r and pd p in the range p > n - r.

    Matching u_i v_i, x joined to v_1..v_a, y joined to every u_i and to t
    leaves z_i, with t = n - 2r - 2 and a = p + r - n + 2.
    """
    if not (3 <= r and 2 * r <= n - 2):
        raise FamilyError(f"need 3 <= r <= n/2 - 1, got r={r}, n={n}")
    if not (n - r < p < n - 1):
        raise FamilyError(f"need n - r < p < n - 1, got p={p}")
    t = n - 2 * r - 2
    a = p + r - n + 2
    if not 3 <= a <= r:
        raise FamilyError(f"derived a={a} outside [3, {r}]")
    bld = _Builder()
    u = bld.block("u", r)
    v = bld.block("v", r)
    x = bld.single("x")
    y = bld.single("y")
    z = bld.block("z", t)
    bld.edges += [(u[i], v[i]) for i in range(r)]
    bld.edges += [(x, v[i]) for i in range(a)]
    bld.edges += [(y, u[i]) for i in range(r)]
    bld.edges += [(y, zi) for zi in z]
    G = bld.graph()
    if G.n != n or not is_connected(G) or not is_bipartite(G):
        raise RuntimeError(f"bipartite family produced a bad graph for {(n, p, r)}")
    return FamilyManifest("bipartite", G, bld.labels, (p, r), {"a": a, "t": t})


@dataclass
class PdRegSet:
    """(pd, reg) pairs, each optionally tagged with a witness id."""

    witnesses: dict[tuple[int, int], str | None] = field(default_factory=dict)

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "PdRegSet":
        out = cls()
        for p, r in pairs:
            if p < 0 or r < 0:
                raise ValueError("pd and reg are nonnegative")
            out.witnesses[(p, r)] = None
        return out

    def add(self, pair: tuple[int, int], witness: str | None = None) -> None:
        self.witnesses.setdefault(pair, witness)

    @property
    def pairs(self) -> set[tuple[int, int]]:
        return set(self.witnesses)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.witnesses

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.witnesses)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        """Pairs ordered by reg, then pd."""
        return sorted(self.witnesses, key=lambda pr: (pr[1], pr[0]))

    def __len__(self) -> int:
        return len(self.witnesses)

    def __eq__(self, other) -> bool:
        if isinstance(other, PdRegSet):
            return self.pairs == other.pairs
        return self.pairs == set(other)

    def to_list(self) -> list[dict]:
        return [{"pd": p, "reg": r, "witness": self.witnesses[(p, r)]} for p, r in self]

    def __str__(self) -> str:
        return "{" + ",".join(f"({p},{r})" for p, r in self) + "}"


def main_theorem_set(n: int) -> PdRegSet:
    """Predicted (pd, reg) pairs over connected bipartite graphs on n vertices."""
    if n < 4:
        raise FamilyError("formula holds for n >= 4")
    pairs = [(p, r) for r in range(1, n // 2) for p in range(_ceil_half(n), n - 1)]
    pairs.append((n - 1, 1))
    if n % 2:
        pairs.append((_ceil_half(n), n // 2))
    return PdRegSet.of(pairs)


def tree_theorem_set(n: int) -> PdRegSet:
    """Predicted (pd, reg) pairs over trees on n vertices."""
    if n < 4:
        raise FamilyError("formula holds for n >= 4")
    return PdRegSet.of(
        (p, r) for r in range(1, (n + 1) // 2) if 2 * r < n
        for p in range(_ceil_half(n), n - r + 1)
    )


def witness(n: int, p: int, r: int) -> FamilyManifest:
    """Connected bipartite graph on n vertices realising (pd, reg) = (p, r)."""
    if (p, r) not in main_theorem_set(n):
        raise FamilyError(f"({p},{r}) is not in the predicted set for n={n}")
    if (p, r) == (n - 1, 1):
        G = star(n - 1)
        labels = {0: "a_1", **{j: f"b_{j}" for j in range(1, n)}}
        return FamilyManifest("complete_bipartite", G, labels, (p, r), {"a": 1, "b": n - 1})
    if p <= n - r:
        return tree_family(n, p, r)
    return bipartite_family(n, p, r)
