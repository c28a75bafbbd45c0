"""numba-compiled hot loops.

All graphs cross this boundary as ``int64`` arrays of adjacency bitmasks
(``adj[v]`` has bit ``u`` set iff ``{u, v}`` is an edge).  Faces of a
simplicial complex are ``int64`` vertex bitmasks sorted by (size, value).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def independent_sets(adj):
    n = adj.shape[0]
    total = 1 << n
    keep = np.zeros(total, dtype=np.bool_)
    count = 0
    for m in range(total):
        ok = True
        rest = m
        while rest:
            low = rest & -rest
            v = 0
            while (low >> v) != 1:
                v += 1
            if adj[v] & m:
                ok = False
                break
            rest ^= low
        if ok:
            keep[m] = True
            count += 1
    out = np.empty(count, dtype=np.int64)
    sizes = np.empty(count, dtype=np.int64)
    k = 0
    for m in range(total):
        if keep[m]:
            out[k] = m
            sizes[k] = popcount(m)
            k += 1
    order = np.argsort(sizes * total + out, kind="mergesort")
    return out[order]


@njit(cache=True)
def _gf2_rank_boundary(faces, lo, hi, rows, pos, size):
    """Rank over GF(2) of the boundary map from faces[lo:hi] to the
    ``rows`` faces one size smaller (indexed through ``pos``)."""
    words = (rows + 63) // 64
    basis = np.zeros((rows, words), dtype=np.uint64)
    has = np.zeros(rows, dtype=np.bool_)
    vec = np.zeros(words, dtype=np.uint64)
    rank = 0
    for c in range(lo, hi):
        f = faces[c]
        for w in range(words):
            vec[w] = 0
        rest = f
        while rest:
            low = rest & -rest
            r = pos[f ^ low]
            vec[r >> 6] |= np.uint64(1) << np.uint64(r & 63)
            rest ^= low
        while True:
            top = -1
            for w in range(words - 1, -1, -1):
                x = vec[w]
                if x != 0:
                    b = 63
                    while (x >> np.uint64(b)) == 0:
                        b -= 1
                    top = w * 64 + b
                    break
            if top < 0:
                break
            if has[top]:
                for w in range(words):
                    vec[w] ^= basis[top, w]
            else:
                for w in range(words):
                    basis[top, w] = vec[w]
                has[top] = True
                rank += 1
                break
        if rank == rows:
            break
    return rank


@njit(cache=True)
def _gfp_rank_boundary(faces, lo, hi, rows, pos, size, p):
    cols = hi - lo
    mat = np.zeros((rows, cols), dtype=np.int64)
    for c in range(lo, hi):
        f = faces[c]
        rest = f
        k = 0
        while rest:
            low = rest & -rest
            r = pos[f ^ low]
            mat[r, c - lo] = 1 if k % 2 == 0 else p - 1
            rest ^= low
            k += 1
    rank = 0
    for col in range(cols):
        piv = -1
        for r in range(rank, rows):
            if mat[r, col] % p != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, cols):
                t = mat[piv, j]
                mat[piv, j] = mat[rank, j]
                mat[rank, j] = t
        inv = 1
        a = mat[rank, col] % p
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * a) % p
            a = (a * a) % p
            e >>= 1
        for j in range(col, cols):
            mat[rank, j] = (mat[rank, j] * inv) % p
        for r in range(rank + 1, rows):
            fct = mat[r, col] % p
            if fct != 0:
                for j in range(col, cols):
                    mat[r, j] = (mat[r, j] - fct * mat[rank, j]) % p
        rank += 1
        if rank == rows:
            break
    return rank


@njit(cache=True)
def _reduced_homology(faces, count, n, p, pos, out):
    """Write dim H~_d into out[d + 1] for the complex faces[:count]."""
    for d in range(out.shape[0]):
        out[d] = 0
    if count == 0:
        return
    starts = np.zeros(n + 2, dtype=np.int64)
    for k in range(count):
        starts[popcount(faces[k]) + 1] += 1
    for s in range(1, n + 2):
        starts[s] += starts[s - 1]
    # local index of each face within its size class
    for s in range(n + 1):
        for k in range(starts[s], starts[s + 1]):
            pos[faces[k]] = k - starts[s]
    ranks = np.zeros(n + 2, dtype=np.int64)
    for s in range(1, n + 1):
        lo = starts[s]
        hi = starts[s + 1]
        rows = starts[s] - starts[s - 1]
        if hi == lo or rows == 0:
            continue
        if p == 2:
            ranks[s] = _gf2_rank_boundary(faces, lo, hi, rows, pos, s)
        else:
            ranks[s] = _gfp_rank_boundary(faces, lo, hi, rows, pos, s, p)
    for s in range(n + 1):
        fs = starts[s + 1] - starts[s]
        out[s] = fs - ranks[s] - ranks[s + 1]


@njit(cache=True)
def homology_ranks(faces, n, p):
    pos = np.zeros(1 << n, dtype=np.int64)
    out = np.zeros(n + 1, dtype=np.int64)
    _reduced_homology(faces, faces.shape[0], n, p, pos, out)
    return out


@njit(cache=True)
def betti_counts(faces, n, p, cone_adj, min_size):
    """Hochster sum: table[i, j] = b_{i,j} of the Stanley-Reisner ideal.

    Subsets W whose induced complex is a cone (some vertex of W has no
    neighbour inside W, when ``cone_adj`` carries graph adjacency) are
    acyclic and skipped.
    """
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    pos = np.zeros(1 << n, dtype=np.int64)
    sub = np.empty(faces.shape[0], dtype=np.int64)
    h = np.zeros(n + 1, dtype=np.int64)
    use_cone = cone_adj.shape[0] == n
    for w in range(1, 1 << n):
        size = popcount(w)
        if size < min_size:
            continue
        if use_cone:
            cone = False
            rest = w
            while rest:
                low = rest & -rest
                v = 0
                while (low >> v) != 1:
                    v += 1
                if cone_adj[v] & w == 0:
                    cone = True
                    break
                rest ^= low
            if cone:
                continue
        cnt = 0
        for k in range(faces.shape[0]):
            if faces[k] & ~w == 0:
                sub[cnt] = faces[k]
                cnt += 1
        _reduced_homology(sub, cnt, n, p, pos, h)
        for d in range(-1, size - 1):
            v = h[d + 1]
            if v:
                i = size - d - 2
                table[i, size] += v
    return table


@njit(cache=True)
def canonical_perm(adj):
    """Vertex order minimising the column-wise upper-triangle bit string
    among orders that list degree classes by decreasing degree."""
    n = adj.shape[0]
    deg = np.zeros(n, dtype=np.int64)
    for v in range(n):
        deg[v] = popcount(adj[v])
    order = np.argsort(-deg, kind="mergesort")
    slot = np.empty(n, dtype=np.int64)
    for k in range(n):
        slot[k] = deg[order[k]]
    perm = np.zeros(n, dtype=np.int64)
    best = np.zeros(n, dtype=np.int64)
    best_cols = np.zeros(n, dtype=np.int64)
    cols = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    ptr = np.zeros(n + 1, dtype=np.int64)
    better = np.zeros(n + 1, dtype=np.bool_)
    have = False
    depth = 0
    better[0] = True
    while depth >= 0:
        if depth == n:
            if not have or better[n]:
                for k in range(n):
                    best[k] = perm[k]
                    best_cols[k] = cols[k]
                have = True
            for k in range(n + 1):
                better[k] = False
            depth -= 1
            used[perm[depth]] = False
            continue
        placed = False
        while ptr[depth] < n:
            v = order[ptr[depth]]
            ptr[depth] += 1
            if used[v] or deg[v] != slot[depth]:
                continue
            col = 0
            for i in range(depth):
                col = (col << 1) | ((adj[perm[i]] >> v) & 1)
            nb = better[depth] or not have
            if not nb:
                if col > best_cols[depth]:
                    continue
                nb = col < best_cols[depth]
            perm[depth] = v
            used[v] = True
            cols[depth] = col
            better[depth + 1] = nb
            depth += 1
            ptr[depth] = 0
            placed = True
            break
        if not placed:
            depth -= 1
            if depth >= 0:
                used[perm[depth]] = False
    return best


@njit(cache=True)
def canonical_batch(adjs):
    m, n = adjs.shape
    out = np.zeros((m, n), dtype=np.int64)
    for g in range(m):
        perm = canonical_perm(adjs[g])
        for i in range(n):
            row = 0
            a = adjs[g, perm[i]]
            for j in range(n):
                if (a >> perm[j]) & 1:
                    row |= 1 << j
            out[g, i] = row
    return out


@njit(cache=True)
def _rooted_code(adj, root, blocked, n):
    parent = np.full(n, -1, dtype=np.int64)
    bfs = np.empty(n, dtype=np.int64)
    bfs[0] = root
    head = 0
    tail = 1
    seen = (1 << root) | (0 if blocked < 0 else (1 << blocked))
    while head < tail:
        v = bfs[head]
        head += 1
        rest = adj[v] & ~seen
        while rest:
            low = rest & -rest
            u = 0
            while (low >> u) != 1:
                u += 1
            parent[u] = v
            seen |= low
            bfs[tail] = u
            tail += 1
            rest ^= low
    code = np.zeros(n, dtype=np.int64)
    length = np.zeros(n, dtype=np.int64)
    kids = np.empty(n, dtype=np.int64)
    for t in range(tail - 1, -1, -1):
        v = bfs[t]
        nk = 0
        for u in range(n):
            if parent[u] == v:
                # insertion sort by (length, code)
                j = nk
                while j > 0 and (length[kids[j - 1]] > length[u] or (
                        length[kids[j - 1]] == length[u] and code[kids[j - 1]] > code[u])):
                    kids[j] = kids[j - 1]
                    j -= 1
                kids[j] = u
                nk += 1
        c = 1
        ln = 2
        for j in range(nk):
            c = (c << length[kids[j]]) | code[kids[j]]
            ln += length[kids[j]]
        code[v] = c << 1
        length[v] = ln
    return code[root], length[root]


@njit(cache=True)
def tree_code(adj):
    """Exact isomorphism code of a tree (centre-rooted AHU encoding)."""
    n = adj.shape[0]
    remaining = (1 << n) - 1
    while popcount(remaining) > 2:
        leaves = 0
        for v in range(n):
            if (remaining >> v) & 1 and popcount(adj[v] & remaining) <= 1:
                leaves |= 1 << v
        remaining &= ~leaves
    c1 = 0
    while not (remaining >> c1) & 1:
        c1 += 1
    if popcount(remaining) == 1:
        code, ln = _rooted_code(adj, c1, -1, n)
        return code
    c2 = c1 + 1
    while not (remaining >> c2) & 1:
        c2 += 1
    a, la = _rooted_code(adj, c1, c2, n)
    b, lb = _rooted_code(adj, c2, c1, n)
    if la > lb or (la == lb and a > b):
        a, b = b, a
        la, lb = lb, la
    return (((1 << la) | a) << lb) | b


@njit(cache=True)
def prufer_decode(seq, n):
    adj = np.zeros(n, dtype=np.int64)
    deg = np.ones(n, dtype=np.int64)
    for a in seq:
        deg[a] += 1
    for a in seq:
        leaf = 0
        while deg[leaf] != 1:
            leaf += 1
        adj[leaf] |= 1 << a
        adj[a] |= 1 << leaf
        deg[leaf] -= 1
        deg[a] -= 1
    u = -1
    for v in range(n):
        if deg[v] == 1:
            if u < 0:
                u = v
            else:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


@njit(cache=True)
def tree_class_reps(n):
    """First Prüfer sequence (in lexicographic order) of every tree
    isomorphism class on n >= 3 vertices."""
    L = n - 2
    seen = np.zeros(1 << (2 * n + 1), dtype=np.bool_)
    reps = np.empty((0, L), dtype=np.int64)
    found = []
    seq = np.zeros(L, dtype=np.int64)
    while True:
        code = tree_code(prufer_decode(seq, n))
        if not seen[code]:
            seen[code] = True
            found.append(seq.copy())
        k = L - 1
        while k >= 0 and seq[k] == n - 1:
            seq[k] = 0
            k -= 1
        if k < 0:
            break
        seq[k] += 1
    reps = np.empty((len(found), L), dtype=np.int64)
    for i in range(len(found)):
        reps[i] = found[i]
    return reps


@njit(cache=True)
def is_chordal_masks(adj):
    """Maximum cardinality search, then a perfect-elimination check."""
    n = adj.shape[0]
    weight = np.zeros(n, dtype=np.int64)
    numbered = 0
    order = np.empty(n, dtype=np.int64)
    for k in range(n):
        best = -1
        for v in range(n):
            if not (numbered >> v) & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order[k] = best
        numbered |= 1 << best
        rest = adj[best] & ~numbered
        while rest:
            low = rest & -rest
            u = 0
            while (low >> u) != 1:
                u += 1
            weight[u] += 1
            rest ^= low
    # earlier-numbered neighbours of each vertex must form a clique; it is
    # enough to check they are adjacent to the latest of them
    seen = 0
    for k in range(n):
        v = order[k]
        prev = adj[v] & seen
        if prev:
            latest = -1
            for j in range(k - 1, -1, -1):
                if (prev >> order[j]) & 1:
                    latest = order[j]
                    break
            if (prev & ~(1 << latest)) & ~adj[latest]:
                return False
        seen |= 1 << v
    return True


@njit(cache=True)
def cochordal_table(n, eu, ev):
    """state[mask] == 1 iff the edge subset ``mask`` is co-chordal.

    Grown from the empty set one edge at a time; co-chordal edge sets are
    connected under single-edge steps, so every one is reached.
    """
    m = eu.shape[0]
    full = (1 << n) - 1
    state = np.zeros(1 << m, dtype=np.uint8)
    state[0] = 1
    stack = np.empty(1 << m, dtype=np.int64)
    stack[0] = 0
    top = 1
    comp = np.empty(n, dtype=np.int64)
    while top > 0:
        top -= 1
        mask = stack[top]
        for e in range(m):
            nm = mask | (1 << e)
            if nm == mask or state[nm] != 0:
                continue
            for v in range(n):
                comp[v] = full & ~(1 << v)
            for f in range(m):
                if (nm >> f) & 1:
                    comp[eu[f]] &= ~(1 << ev[f])
                    comp[ev[f]] &= ~(1 << eu[f])
            if is_chordal_masks(comp):
                state[nm] = 1
                stack[top] = nm
                top += 1
            else:
                state[nm] = 2
    return state


@njit(cache=True)
def bipartite_candidates(n, k):
    """Connected bipartite graphs with sides 0..k-1 and k..n-1 whose side-A
    neighbourhoods are nondecreasing as column bitmasks.

    Every connected bipartite graph with a side of size k is isomorphic to
    at least one of them.  Returns an (m, n) array of adjacency masks.
    """
    c = n - k
    top = (1 << c) - 1
    found = []
    rows = np.ones(k, dtype=np.int64)
    while True:
        cols = 0
        for i in range(k):
            cols |= rows[i]
        if cols == top:
            reached = 1
            cover = rows[0]
            changed = True
            while changed:
                changed = False
                for i in range(1, k):
                    if not (reached >> i) & 1 and rows[i] & cover:
                        reached |= 1 << i
                        cover |= rows[i]
                        changed = True
            if reached == (1 << k) - 1:
                adj = np.zeros(n, dtype=np.int64)
                for i in range(k):
                    adj[i] = rows[i] << k
                    for j in range(c):
                        if (rows[i] >> j) & 1:
                            adj[k + j] |= 1 << i
                found.append(adj)
        i = k - 1
        while i >= 0 and rows[i] == top:
            i -= 1
        if i < 0:
            break
        rows[i] += 1
        for j in range(i + 1, k):
            rows[j] = rows[i]
    out = np.zeros((len(found), n), dtype=np.int64)
    for g in range(len(found)):
        out[g] = found[g]
    return out
