"""Pure-numpy fallback for the compiled kernels.

Same signatures and results as :mod:`edgebetti.kernels._jit`.  Linear
algebra and subset filtering are vectorised; the branch-and-bound searches
are plain Python.
"""

from __future__ import annotations

import numpy as np


def popcount(x: int) -> int:
    return int(x).bit_count()


def _popcounts(arr: np.ndarray) -> np.ndarray:
    arr = arr.astype(np.int64)
    out = np.zeros(arr.shape, dtype=np.int64)
    for b in range(63):
        out += (arr >> b) & 1
    return out


def independent_sets(adj: np.ndarray) -> np.ndarray:
    n = len(adj)
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for v in range(n):
        ok &= ~((((masks >> v) & 1) == 1) & ((masks & int(adj[v])) != 0))
    faces = masks[ok]
    order = np.lexsort((faces, _popcounts(faces)))
    return faces[order]


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    if mat.size == 0:
        return 0
    if p == 2:
        m = (mat % 2).astype(bool)
        rows, cols = m.shape
        r = 0
        for c in range(cols):
            nz = np.flatnonzero(m[r:, c])
            if nz.size == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                m[[r, piv]] = m[[piv, r]]
            hit = m[:, c].copy()
            hit[r] = False
            m[hit] ^= m[r]
            r += 1
            if r == rows:
                break
        return r
    m = mat.astype(np.int64) % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        f = m[:, c].copy()
        f[r] = 0
        m = (m - np.outer(f, m[r])) % p
        r += 1
        if r == rows:
            break
    return r


def _boundary(lower: np.ndarray, upper: np.ndarray, p: int) -> np.ndarray:
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    if len(lower) == 0 or len(upper) == 0:
        return mat
    size = popcount(upper[0])
    bits = np.zeros((len(upper), size), dtype=np.int64)
    rest = upper.copy()
    for k in range(size):
        low = rest & -rest
        bits[:, k] = low
        rest ^= low
    cols = np.arange(len(upper))
    for k in range(size):
        rows = np.searchsorted(lower, upper ^ bits[:, k])
        mat[rows, cols] = 1 if k % 2 == 0 else p - 1
    return mat


def homology_ranks(faces: np.ndarray, n: int, p: int) -> np.ndarray:
    out = np.zeros(n + 1, dtype=np.int64)
    faces = np.asarray(faces, dtype=np.int64)
    if faces.size == 0:
        return out
    sizes = _popcounts(faces)
    groups = [np.sort(faces[sizes == s]) for s in range(n + 1)]
    ranks = np.zeros(n + 2, dtype=np.int64)
    for s in range(1, n + 1):
        if len(groups[s]) and len(groups[s - 1]):
            ranks[s] = rank_mod_p(_boundary(groups[s - 1], groups[s], p), p)
    for s in range(n + 1):
        out[s] = len(groups[s]) - ranks[s] - ranks[s + 1]
    return out


def betti_counts(faces, n, p, cone_adj, min_size):
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    faces = np.asarray(faces, dtype=np.int64)
    use_cone = len(cone_adj) == n
    for w in range(1, 1 << n):
        size = popcount(w)
        if size < min_size:
            continue
        if use_cone and any((w >> v) & 1 and not int(cone_adj[v]) & w for v in range(n)):
            continue
        h = homology_ranks(faces[(faces & ~w) == 0], n, p)
        for d in range(-1, size - 1):
            if h[d + 1]:
                table[size - d - 2, size] += h[d + 1]
    return table


def canonical_perm(adj):
    n = len(adj)
    adj = [int(a) for a in adj]
    deg = [popcount(a) for a in adj]
    order = sorted(range(n), key=lambda v: -deg[v])
    slot = [deg[v] for v in order]
    best: list[int] | None = None
    best_cols: list[int] = []
    perm: list[int] = []
    cols: list[int] = []

    def search(better: bool) -> bool:
        # returns True when a new best leaf was recorded below this node
        nonlocal best, best_cols
        depth = len(perm)
        if depth == n:
            if best is None or better:
                best, best_cols = perm[:], cols[:]
                return True
            return False
        improved = False
        for v in order:
            if v in perm or deg[v] != slot[depth]:
                continue
            col = 0
            for u in perm:
                col = (col << 1) | ((adj[u] >> v) & 1)
            nb = better or best is None
            if not nb:
                if col > best_cols[depth]:
                    continue
                nb = col < best_cols[depth]
            perm.append(v)
            cols.append(col)
            if search(nb):
                improved = True
                better = False
            perm.pop()
            cols.pop()
        return improved

    search(True)
    return np.array(best if best is not None else [], dtype=np.int64)


def canonical_batch(adjs):
    adjs = np.asarray(adjs, dtype=np.int64)
    m, n = adjs.shape
    out = np.zeros((m, n), dtype=np.int64)
    for g in range(m):
        perm = canonical_perm(adjs[g])
        for i in range(n):
            a = int(adjs[g, perm[i]])
            out[g, i] = sum(1 << j for j in range(n) if (a >> int(perm[j])) & 1)
    return out


def _rooted_code(adj, root, blocked):
    def enc(v, parent):
        kids = sorted((enc(u, v) for u in _bits(adj[v]) if u != parent and u != blocked),
                      key=lambda t: (t[1], t[0]))
        code, ln = 1, 2
        for c, l in kids:
            code = (code << l) | c
            ln += l
        return code << 1, ln
    return enc(root, -1)


def _bits(x):
    x = int(x)
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def tree_code(adj):
    n = len(adj)
    remaining = (1 << n) - 1
    while popcount(remaining) > 2:
        leaves = 0
        for v in _bits(remaining):
            if popcount(int(adj[v]) & remaining) <= 1:
                leaves |= 1 << v
        remaining &= ~leaves
    centres = list(_bits(remaining))
    if len(centres) == 1:
        return _rooted_code(adj, centres[0], -1)[0]
    c1, c2 = centres
    a, la = _rooted_code(adj, c1, c2)
    b, lb = _rooted_code(adj, c2, c1)
    if (la, a) > (lb, b):
        a, b, la, lb = b, a, lb, la
    return (((1 << la) | a) << lb) | b


def prufer_decode(seq, n):
    adj = np.zeros(n, dtype=np.int64)
    deg = [1] * n
    for a in seq:
        deg[a] += 1
    for a in seq:
        leaf = deg.index(1)
        adj[leaf] |= 1 << int(a)
        adj[a] |= 1 << leaf
        deg[leaf] -= 1
        deg[a] -= 1
    ends = [v for v in range(n) if deg[v] == 1]
    u, v = ends
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return adj


def tree_class_reps(n):
    from itertools import product

    seen = set()
    found = []
    for seq in product(range(n), repeat=n - 2):
        code = tree_code(prufer_decode(seq, n))
        if code not in seen:
            seen.add(code)
            found.append(seq)
    return np.array(found, dtype=np.int64).reshape(len(found), n - 2)


def is_chordal_masks(adj):
    n = len(adj)
    adj = [int(a) for a in adj]
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        best = max((v for v in range(n) if not (numbered >> v) & 1),
                   key=lambda v: (weight[v], -v))
        order.append(best)
        numbered |= 1 << best
        for u in _bits(adj[best] & ~numbered):
            weight[u] += 1
    seen = 0
    for k, v in enumerate(order):
        prev = adj[v] & seen
        if prev:
            latest = next(order[j] for j in range(k - 1, -1, -1) if (prev >> order[j]) & 1)
            if (prev & ~(1 << latest)) & ~adj[latest]:
                return False
        seen |= 1 << v
    return True


def cochordal_table(n, eu, ev):
    m = len(eu)
    full = (1 << n) - 1
    state = np.zeros(1 << m, dtype=np.uint8)
    state[0] = 1
    stack = [0]
    while stack:
        mask = stack.pop()
        for e in range(m):
            nm = mask | (1 << e)
            if nm == mask or state[nm]:
                continue
            comp = [full & ~(1 << v) for v in range(n)]
            for f in _bits(nm):
                comp[eu[f]] &= ~(1 << int(ev[f]))
                comp[ev[f]] &= ~(1 << int(eu[f]))
            if is_chordal_masks(comp):
                state[nm] = 1
                stack.append(nm)
            else:
                state[nm] = 2
    return state


def bipartite_candidates(n, k):
    from itertools import combinations_with_replacement

    c = n - k
    top = (1 << c) - 1
    found = []
    for rows in combinations_with_replacement(range(1, top + 1), k):
        cols = 0
        for r in rows:
            cols |= r
        if cols != top:
            continue
        reached, cover = 1, rows[0]
        changed = True
        while changed:
            changed = False
            for i in range(1, k):
                if not (reached >> i) & 1 and rows[i] & cover:
                    reached |= 1 << i
                    cover |= rows[i]
                    changed = True
        if reached != (1 << k) - 1:
            continue
        adj = [0] * n
        for i, r in enumerate(rows):
            adj[i] = r << k
            for j in _bits(r):
                adj[k + j] |= 1 << i
        found.append(adj)
    return np.array(found, dtype=np.int64).reshape(len(found), n)
