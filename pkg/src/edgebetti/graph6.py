"""graph6 encoding (undirected simple graphs, n <= 62 on output)."""

from __future__ import annotations

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
MAX_EMIT = 62


class Graph6Error(GraphError):
    pass


def _bit_order(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def emit_graph6(G: Graph) -> str:
    if G.n > MAX_EMIT:
        raise Graph6Error(f"graph6 output supports n <= {MAX_EMIT}, got {G.n}")
    out = [chr(63 + G.n)]
    acc = nbits = 0
    for i, j in _bit_order(G.n):
        acc = (acc << 1) | ((G.adj[i] >> j) & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + acc))
            acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error(f"character outside graph6 range in {s!r}")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise Graph6Error(f"unsupported graph6 size header in {s!r}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    adj = [0] * n
    k = 0
    for i, j in _bit_order(n):
        if (body[k // 6] >> (5 - k % 6)) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k += 1
    return Graph(n, tuple(adj))
