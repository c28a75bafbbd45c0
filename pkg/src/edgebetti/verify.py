"""Exhaustive small-n verification of the (pd, reg) classification and the
bounds it rests on."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .families import PdRegSet, main_theorem_set, tree_theorem_set
from .graph import (
    Graph,
    connected_components,
    delete_closed_neighborhood,
    delete_vertices,
    from_masks,
    induced_subgraph,
    is_bipartite,
    is_complete_bipartite,
    is_connected,
    is_forest,
)
from .graph6 import emit_graph6, parse_graph6
from .homology import GF2, FieldSpec, hochster_betti, pd_reg, terai_pd_oracle
from .invariants import (
    cochordal_cover_number,
    induced_matching_number,
    matching_cover_witness,
    matching_number,
    tau_max,
)

TREE_MAX_N = 10
BIPARTITE_MAX_N = 9
BIPARTITE_OPT_IN_N = 10
ALL_GRAPHS_MAX_N = 9
COC_AUDIT_MAX_N = 8


class EnumerationError(ValueError):
    pass


@dataclass
class EnumerationStream:
    """Canonical representatives of every isomorphism class in a graph
    class on n vertices, in ascending canonical-string order."""

    kind: str
    n: int
    graphs: list[Graph]

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    def graph6(self) -> list[str]:
        return [emit_graph6(G) for G in self.graphs]


def _dedupe(adjs: np.ndarray, n: int) -> list[Graph]:
    """Canonicalise a batch of adjacency arrays and keep one per class."""
    if len(adjs) == 0:
        return []
    canon = np.asarray(kernels.canonical_batch(np.ascontiguousarray(adjs, dtype=np.int64)))
    uniq = np.unique(canon, axis=0)
    graphs = [from_masks(row) for row in uniq]
    return sorted(graphs, key=lambda G: emit_graph6(G))


def enumerate_trees(n: int) -> EnumerationStream:
    """Trees on n vertices up to isomorphism.

    Sweeps all Prüfer sequences, keeps the first sequence per exact tree
    code, and canonicalises the survivors.
    """
    if not 1 <= n <= TREE_MAX_N:
        raise EnumerationError(f"tree enumeration supports 1 <= n <= {TREE_MAX_N}")
    if n == 1:
        return EnumerationStream("tree", 1, [from_masks([0])])
    if n == 2:
        return EnumerationStream("tree", 2, [from_masks([2, 1])])
    reps = np.asarray(kernels.tree_class_reps(n))
    adjs = np.array([kernels.prufer_decode(np.asarray(seq, dtype=np.int64), n) for seq in reps])
    return EnumerationStream("tree", n, _dedupe(adjs, n))


def enumerate_connected_bipartite(n: int, allow_large: bool = False) -> EnumerationStream:
    """Connected bipartite graphs on n vertices up to isomorphism, via a
    sweep of biadjacency matrices for each smaller-side size k."""
    limit = BIPARTITE_OPT_IN_N if allow_large else BIPARTITE_MAX_N
    if not 2 <= n <= limit:
        hint = "" if allow_large else " (n = 10 needs allow_large)"
        raise EnumerationError(f"bipartite enumeration supports 2 <= n <= {limit}{hint}")
    batches = [np.asarray(kernels.bipartite_candidates(n, k)) for k in range(1, n // 2 + 1)]
    adjs = np.concatenate([b for b in batches if len(b)]) if batches else np.zeros((0, n))
    return EnumerationStream("connected-bipartite", n, _dedupe(adjs, n))


def enumerate_graphs(n: int, connected: bool = False) -> EnumerationStream:
    """All graphs on n vertices up to isomorphism, grown one vertex at a
    time: each class on n - 1 vertices gets a new vertex joined to every
    possible neighbour set."""
    if not 1 <= n <= ALL_GRAPHS_MAX_N:
        raise EnumerationError(f"all-graph enumeration supports 1 <= n <= {ALL_GRAPHS_MAX_N}")
    level = [from_masks([0])]
    for m in range(2, n + 1):
        base = np.array([G.adj for G in level], dtype=np.int64)
        subsets = np.arange(1 << (m - 1), dtype=np.int64)
        cand = np.zeros((len(base), len(subsets), m), dtype=np.int64)
        for v in range(m - 1):
            cand[:, :, v] = base[:, None, v] | (((subsets >> v) & 1) << (m - 1))[None, :]
        cand[:, :, m - 1] = subsets[None, :]
        level = _dedupe(cand.reshape(-1, m), m)
    graphs = [G for G in level if is_connected(G)] if connected else level
    return EnumerationStream("connected" if connected else "all-graphs", n, graphs)


def _pd_reg_task(args: tuple[str, int]) -> tuple[int, int]:
    g6, p = args
    return pd_reg(parse_graph6(g6), FieldSpec(p))


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def realized_set(stream: Iterable[Graph], F: FieldSpec = GF2, jobs: int = 1) -> PdRegSet:
    """(pd, reg) pairs realised by the stream; the witness kept for each
    pair is the first graph (in stream order) realising it."""
    g6s = [emit_graph6(G) for G in stream]
    pairs = _map(_pd_reg_task, [(s, F.characteristic) for s in g6s], jobs)
    out = PdRegSet()
    for s, pr in zip(g6s, pairs):
        out.add((int(pr[0]), int(pr[1])), s)
    return out


@dataclass
class Verdict:
    check: str
    passed: bool
    observed: dict[str, Any] = field(default_factory=dict)


@dataclass
class AuditReport:
    subject: str
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def add(self, check: str, passed: bool, **observed) -> None:
        self.verdicts.append(Verdict(check, bool(passed), observed))

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "verdicts": [
                {"check": v.check, "passed": v.passed, "observed": v.observed} for v in self.verdicts
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _compare_sets(subject: str, realized: PdRegSet, predicted: PdRegSet) -> AuditReport:
    report = AuditReport(subject)
    missing = sorted(predicted.pairs - realized.pairs)
    extra = sorted(realized.pairs - predicted.pairs)
    report.add(
        "set_equality",
        not missing and not extra,
        realized=realized.to_list(),
        predicted=[list(pr) for pr in predicted],
        missing=[list(pr) for pr in missing],
        unexpected=[{"pd": p, "reg": r, "witness": realized.witnesses[(p, r)]} for p, r in extra],
    )
    return report


def check_main_theorem(n: int, F: FieldSpec = GF2, jobs: int = 1,
                       allow_large: bool = False) -> AuditReport:
    stream = enumerate_connected_bipartite(n, allow_large=allow_large)
    report = _compare_sets(f"main-theorem n={n}", realized_set(stream, F, jobs), main_theorem_set(n))
    report.verdicts[0].observed["graphs"] = len(stream)
    return report


def check_tree_theorem(n: int, F: FieldSpec = GF2, jobs: int = 1) -> AuditReport:
    stream = enumerate_trees(n)
    report = _compare_sets(f"tree-theorem n={n}", realized_set(stream, F, jobs), tree_theorem_set(n))
    report.verdicts[0].observed["graphs"] = len(stream)
    return report


def audit_bounds(G: Graph, F: FieldSpec = GF2, coc_max_n: int = COC_AUDIT_MAX_N) -> AuditReport:
    """Evaluate every applicable bound and classification claim on G.

    Classification claims are checked in both directions.  Claims whose
    hypotheses G does not meet are skipped, not recorded.
    """
    n = G.n
    report = AuditReport(emit_graph6(G))
    table = hochster_betti(G, F)
    pd, reg = table.pd(), table.reg()
    mat = matching_number(G)
    indm = induced_matching_number(G)
    tmax = tau_max(G)
    connected = is_connected(G)
    bipartite = is_bipartite(G)
    forest = is_forest(G)
    no_isolated = not G.isolated_vertices()
    obs = dict(pd=pd, reg=reg, mat=mat, indm=indm, tau_max=tmax)

    report.add("betti_1_2_equals_edges", table[(1, 2)] == G.num_edges,
               b12=table[(1, 2)], edges=G.num_edges)
    report.add("pd_ge_tau_max", pd >= tmax, **obs)
    report.add("reg_ge_indm", reg >= indm, **obs)
    report.add("reg_le_mat", reg <= mat, **obs)
    if forest:
        report.add("forest_pd_eq_tau_max", pd == tmax, **obs)
        report.add("forest_reg_eq_indm", reg == indm, **obs)
    if forest and connected:
        report.add("tree_tau_max_plus_indm_le_n", tmax + indm <= n, n=n, **obs)

    comps = connected_components(G)
    if len(comps) > 1:
        parts = [pd_reg(induced_subgraph(G, c)[0], F)[1] for c in comps]
        report.add("reg_additive_over_components", reg == sum(parts), reg=reg, parts=parts)

    for x in range(n):
        gx = pd_reg(delete_vertices(G, [x]), F)
        gnx = pd_reg(delete_closed_neighborhood(G, x), F)
        deg = G.degree(x)
        report.add("deletion_reg_bound", reg <= max(gx[1], gnx[1] + 1),
                   x=x, reg=reg, reg_minus_x=gx[1], reg_minus_closed_nbhd=gnx[1])
        report.add("deletion_pd_bound", pd <= max(gx[0] + 1, gnx[0] + deg),
                   x=x, pd=pd, pd_minus_x=gx[0], pd_minus_closed_nbhd=gnx[0], degree=deg)

    coc = None
    if n <= coc_max_n and G.num_edges:
        coc = cochordal_cover_number(G)
        report.add("reg_le_coc", reg <= coc, reg=reg, coc=coc)

    if bipartite and n >= 2 and no_isolated:
        report.add("coarse_pd_bounds", (n + 1) // 2 <= pd <= n - 1, n=n, pd=pd)
        report.add("coarse_reg_bounds", 1 <= reg <= n // 2, n=n, reg=reg)

    if n % 2 == 0 and n >= 2:
        perfect = all(G.degree(v) == 1 for v in range(n))
        report.add("even_reg_half_iff_disjoint_edges", (reg == n // 2) == perfect,
                   n=n, reg=reg, disjoint_edges=perfect)
    if connected and n >= 4 and n % 2 == 0:
        report.add("even_connected_reg_below_half", 2 * reg < n, n=n, reg=reg)
        if mat == n // 2:
            error = None
            try:
                parts = matching_cover_witness(G)
            except (RuntimeError, ValueError) as exc:
                parts, error = [], str(exc)
            report.add("even_perfect_matching_cover", error is None and len(parts) == n // 2 - 1,
                       n=n, parts=len(parts), error=error, coc=coc)

    if bipartite and n % 2 == 1:
        k = n // 2
        report.add("odd_reg_half_iff_indm_half", (reg == k) == (indm == k), n=n, reg=reg, indm=indm)
        if connected and k >= 1 and reg == k:
            report.add("odd_reg_half_forces_pd", pd == k + 1, n=n, pd=pd, reg=reg)

    if bipartite and connected and n >= 2:
        kab = is_complete_bipartite(G)
        report.add("pd_max_iff_complete_bipartite", (pd == n - 1) == kab,
                   n=n, pd=pd, complete_bipartite=kab)
        if kab:
            report.add("complete_bipartite_reg_one", reg == 1, reg=reg)

    if connected and G.num_edges:
        dual = terai_pd_oracle(G, F)
        report.add("alexander_dual_reg_eq_pd", dual == pd, pd=pd, dual_reg=dual)
    return report


def _audit_task(args: tuple[str, int, int]) -> dict:
    g6, p, coc_max_n = args
    return audit_bounds(parse_graph6(g6), FieldSpec(p), coc_max_n).to_dict()


def audit_stream(stream: Iterable[Graph], F: FieldSpec = GF2, jobs: int = 1,
                 coc_max_n: int = COC_AUDIT_MAX_N) -> list[AuditReport]:
    """Audit every graph; reports come back in stream order (collect-all)."""
    g6s = [emit_graph6(G) for G in stream]
    dicts = _map(_audit_task, [(s, F.characteristic, coc_max_n) for s in g6s], jobs)
    return [
        AuditReport(d["subject"], [Verdict(v["check"], v["passed"], v["observed"]) for v in d["verdicts"]])
        for d in dicts
    ]


def summarize(reports: Sequence[AuditReport]) -> dict[str, tuple[int, int]]:
    """check name -> (evaluated, failed)."""
    out: dict[str, list[int]] = {}
    for rep in reports:
        for v in rep.verdicts:
            row = out.setdefault(v.check, [0, 0])
            row[0] += 1
            row[1] += not v.passed
    return {k: (a, b) for k, (a, b) in sorted(out.items())}


def format_summary(summary: dict[str, tuple[int, int]]) -> str:
    width = max([len(k) for k in summary] + [5])
    lines = [f"{'check'.ljust(width)}  evaluated  failed"]
    for k, (a, b) in summary.items():
        lines.append(f"{k.ljust(width)}  {a:9d}  {b:6d}")
    return "\n".join(lines)


def characteristic_comparison(G: Graph, primes: Sequence[int] = (2, 3, 5)) -> dict:
    """(pd, reg) over several prime fields; reports disagreement, never
    raises on it (Betti numbers may depend on the characteristic)."""
    values = {p: pd_reg(G, FieldSpec(p)) for p in primes}
    return {
        "graph6": emit_graph6(G),
        "values": {str(p): list(v) for p, v in values.items()},
        "agree": len(set(values.values())) == 1,
    }

