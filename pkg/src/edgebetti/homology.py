"""Reduced homology over GF(p) and graded Betti tables of S/I(G) via Hochster's formula."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import kernels
from .graph import Graph, GraphError, to_mask
from .invariants import maximal_independent_sets

HOCHSTER_LIMIT = 16


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 2

    def __post_init__(self):
        if not _is_prime(self.characteristic):
            raise ValueError(f"field characteristic must be prime, got {self.characteristic}")

    @classmethod
    def from_env(cls, default: int = 2) -> "FieldSpec":
        """Characteristic from ``BETTI_CHAR`` when set."""
        return cls(int(os.environ.get("BETTI_CHAR", default)))


GF2 = FieldSpec(2)


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 0..n-1 given by facet bitmasks.

    ``facets=()`` is the void complex; ``facets=(0,)`` is {emptyset}.
    """

    n: int
    facets: tuple[int, ...]

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int] | int]) -> "SimplicialComplex":
        masks = {f if isinstance(f, int) else to_mask(f) for f in facets}
        if any(m >> n for m in masks):
            raise ValueError("facet vertex outside 0..n-1")
        maximal = [m for m in masks if not any(m != o and m & ~o == 0 for o in masks)]
        return cls(n, tuple(sorted(maximal, key=lambda m: (m.bit_count(), m))))

    def faces(self) -> np.ndarray:
        """All faces as bitmasks sorted by (size, value)."""
        if not self.facets:
            return np.zeros(0, dtype=np.int64)
        masks = np.arange(1 << self.n, dtype=np.int64)
        keep = np.zeros(masks.shape, dtype=bool)
        for f in self.facets:
            keep |= (masks & ~f) == 0
        faces = masks[keep]
        sizes = np.array([int(x).bit_count() for x in faces], dtype=np.int64)
        return faces[np.lexsort((faces, sizes))]

    def f_vector(self) -> list[int]:
        """Face counts f_{-1}, f_0, ..., f_{n-1}."""
        counts = [0] * (self.n + 1)
        for f in self.faces():
            counts[int(f).bit_count()] += 1
        return counts

    def restrict(self, W: Iterable[int] | int) -> "SimplicialComplex":
        """Induced subcomplex on W (faces contained in W), same vertex labels."""
        wm = W if isinstance(W, int) else to_mask(W)
        faces = [int(f) for f in self.faces() if int(f) & ~wm == 0]
        return SimplicialComplex.from_facets(self.n, faces) if faces else SimplicialComplex(self.n, ())


def independence_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex.from_facets(G.n, list(maximal_independent_sets(G)))


def reduced_homology_ranks(K: SimplicialComplex, F: FieldSpec = GF2) -> list[int]:
    """dim H~_d(K; GF(p)) stored at index d + 1, for d = -1 .. n-1."""
    ranks = kernels.homology_ranks(K.faces(), K.n, F.characteristic)
    return [int(r) for r in ranks]


@dataclass
class BettiTable:
    """Graded Betti numbers b_{i,j} of S/I(G); only nonzero entries stored."""

    n: int
    field_char: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def totals(self) -> list[int]:
        out = [0] * (self.pd() + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "field_char": self.field_char,
            "entries": [{"i": i, "j": j, "rank": b} for (i, j), b in sorted(self.entries.items())],
            "pd": self.pd(),
            "reg": self.reg(),
        }

    def render(self) -> str:
        """Betti diagram: column i, row j - i."""
        pd, reg = self.pd(), self.reg()
        cells = [[str(i) for i in range(pd + 1)], [str(t) for t in self.totals()]]
        for s in range(reg + 1):
            cells.append([str(self.entries[(i, i + s)]) if (i, i + s) in self.entries else "."
                          for i in range(pd + 1)])
        width = max(len(c) for row in cells for c in row)
        labels = [""] + ["total:"] + [f"{s}:" for s in range(reg + 1)]
        lw = max(len(x) for x in labels)
        lines = []
        for lab, row in zip(labels, cells):
            lines.append(lab.rjust(lw) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def _ideal_betti(faces: np.ndarray, n: int, p: int, cone_adj: np.ndarray, min_size: int) -> np.ndarray:
    return np.asarray(kernels.betti_counts(faces, n, p, cone_adj, min_size))


def hochster_betti(G: Graph, F: FieldSpec = GF2, limit: int = HOCHSTER_LIMIT) -> BettiTable:
    """Betti table of S/I(G).

    b_{i,|W|}(I) sums dim H~_{|W|-i-2} of Ind(G) restricted to W over vertex
    sets W with |W| >= 2; then b_{i+1,j}(S/I) = b_{i,j}(I) plus b_{0,0} = 1.
    """
    if G.n > limit:
        raise GraphError(f"Hochster computation limited to n <= {limit}, got {G.n}")
    table = BettiTable(G.n, F.characteristic, {(0, 0): 1})
    if G.num_edges == 0:
        return table
    adj = G.adj_array()
    raw = _ideal_betti(kernels.independent_sets(adj), G.n, F.characteristic, adj, 2)
    for i, j in zip(*np.nonzero(raw)):
        table.entries[(int(i) + 1, int(j))] = int(raw[i, j])
    return table


def pd_reg(G: Graph, F: FieldSpec = GF2) -> tuple[int, int]:
    t = hochster_betti(G, F)
    return t.pd(), t.reg()


def cover_complex(G: Graph) -> SimplicialComplex:
    """Stanley-Reisner complex of the cover ideal: facets V \\ e."""
    iso = G.isolated_vertices()
    if iso:
        raise GraphError(f"cover complex needs no isolated vertices, found {iso}")
    full = G.vertex_mask
    return SimplicialComplex.from_facets(G.n, [full & ~to_mask(e) for e in G.edges()])


def terai_pd_oracle(G: Graph, F: FieldSpec = GF2) -> int:
    """Regularity of the cover ideal (the Alexander dual of I(G)), computed
    by Hochster's formula on the cover complex.  Equals pd(S/I(G))."""
    if G.num_edges == 0:
        raise GraphError("need at least one edge")
    K = cover_complex(G)
    raw = _ideal_betti(K.faces(), G.n, F.characteristic, np.zeros(0, dtype=np.int64), 1)
    return max(int(j) - int(i) for i, j in zip(*np.nonzero(raw)))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic sum_d (-1)^d f_d over d >= -1."""
    return sum((-1) ** (s - 1) * f for s, f in enumerate(K.f_vector()))

