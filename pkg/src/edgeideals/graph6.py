"""graph6 codec (short form, n <= 62).

Layout: one byte 63+n, then the upper triangle of the adjacency matrix read
column by column ((0,1), (0,2), (1,2), (0,3), ...), packed big-endian six
bits per byte, each byte offset by 63.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"


def graph_to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("only graphs with at most 62 vertices are supported")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def graph_from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    n = ord(s[0]) - 63
    if n < 0 or n > 62:
        raise ValueError(f"unsupported graph6 size byte {s[0]!r} (need n <= 62)")
    need = (n * (n - 1) // 2 + 5) // 6
    data = s[1:]
    if len(data) != need:
        raise ValueError(f"graph6 string has {len(data)} data bytes, expected {need}")
    bits = []
    for ch in data:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"invalid graph6 byte {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def iter_graph6(lines) -> "list[Graph]":
    """Decode an iterable of graph6 lines, skipping blanks and the format header."""
    out = []
    for line in lines:
        s = line.strip()
        if not s or s == HEADER:
            continue
        out.append(graph_from_graph6(s))
    return out
