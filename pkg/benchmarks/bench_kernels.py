"""Compare the numba and pure-numpy kernel backends on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends are imported directly, so one process times both; the
``EDGEBETTI_NO_NUMBA=1`` switch selects the same numpy module at runtime.
JIT compile time is excluded by a warm-up call.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from edgebetti.kernels import _jit, _np
from edgebetti.verify import enumerate_connected_bipartite, enumerate_trees


def _betti_all(mod, adjs, n):
    for adj in adjs:
        faces = mod.independent_sets(adj)
        mod.betti_counts(faces, n, 2, adj, 2)


def _workloads(quick: bool):
    n_b = 7 if quick else 8
    bip = [np.asarray(G.adj, dtype=np.int64) for G in enumerate_connected_bipartite(n_b)]
    n_t = 8 if quick else 9
    trees = [np.asarray(G.adj, dtype=np.int64) for G in enumerate_trees(n_t)]
    batch = np.asarray(_jit.bipartite_candidates(n_b, n_b // 2))
    return {
        f"hochster, {len(bip)} bipartite graphs n={n_b}": lambda m: _betti_all(m, bip, n_b),
        f"hochster, {len(trees)} trees n={n_t}": lambda m: _betti_all(m, trees, n_t),
        f"canonical_batch, {len(batch)} graphs n={n_b}": lambda m: m.canonical_batch(batch),
        "bipartite_candidates n=8, k=4": lambda m: m.bipartite_candidates(8, 4),
        "tree_class_reps n=8": lambda m: m.tree_class_reps(8),
    }


def _time(fn, mod, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(mod)
        best = min(best, time.perf_counter() - t)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()

    rows = []
    for name, fn in _workloads(args.quick).items():
        fn(_jit)  # compile
        t_jit = _time(fn, _jit, args.repeat)
        t_np = _time(fn, _np, max(1, args.repeat // 3))
        rows.append((name, t_np, t_jit))

    w = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(w)}  {'numpy s':>9}  {'numba s':>9}  {'speedup':>8}")
    for name, a, b in rows:
        print(f"{name.ljust(w)}  {a:9.4f}  {b:9.4f}  {a / b:7.1f}x")


if __name__ == "__main__":
    main()
