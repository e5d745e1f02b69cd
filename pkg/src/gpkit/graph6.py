"""graph6 encoding, short form only (order 1..62).

A record is the size byte ``n + 63`` followed by the upper triangle of the
adjacency matrix in column order (``x(0,1), x(0,2), x(1,2), x(0,3), ...``),
packed six bits per byte, most significant first, zero padded, each byte
offset by 63.
"""

from __future__ import annotations

from gpkit.graph import Graph, GraphError

HEADER = ">>graph6<<"
MAX_ORDER = 62


class Graph6Error(GraphError):
    pass


def to_graph6(g: Graph) -> str:
    n = g.order
    if n > MAX_ORDER:
        raise Graph6Error(f"graph6 short form supports order <= {MAX_ORDER}, got {n}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        try:
            line = line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error(f"byte out of range 63..126: {exc}") from None
    text = line.rstrip("\r\n")
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 record")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ord(ch)} at offset {pos} is outside 63..126")
    n = ord(text[0]) - 63
    if n == 63:
        raise Graph6Error("long-form size prefix (order > 62) is not supported")
    if n < 1:
        raise Graph6Error("graph6 size prefix encodes order 0")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"order {n} needs {nbytes} body bytes, got {len(body)}"
        )
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            b = val >> shift & 1
            if k < nbits:
                if b:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif b:
                raise Graph6Error("nonzero padding bits after the adjacency data")
            k += 1
    return Graph(n, tuple(rows))
