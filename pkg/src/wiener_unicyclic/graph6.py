"""graph6 text format: one undirected simple graph per line.

Implements the standard encoding (size bytes, then the upper triangle of
the adjacency matrix in column order, six bits per printable character).
The optional ``>>graph6<<`` header is accepted on decode and never
written. Parse failures raise :class:`Graph6ParseError` carrying the
byte offset of the offending character within the given line.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph

HEADER = ">>graph6<<"

_LOW = 63  # printable range is chr(63)..chr(126)
_HIGH = 126


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position in the line."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def graph6_encode(g: Graph) -> str:
    """Encode a graph as a graph6 line (no header, no newline)."""
    n = g.n
    if n <= 62:
        out = [chr(n + _LOW)]
    else:
        # 64 >= n > 62 uses the '~' + 18-bit size form
        out = [chr(_HIGH), chr((n >> 12 & 63) + _LOW), chr((n >> 6 & 63) + _LOW), chr((n & 63) + _LOW)]
    group = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + _LOW))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + _LOW))
    return "".join(out)


def graph6_decode(line: str) -> Graph:
    """Decode one graph6 line (optional header, trailing newline tolerated)."""
    s = line.rstrip("\r\n")
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
        base = len(HEADER)
    if not s:
        raise Graph6ParseError("empty graph6 line", base)
    vals = []
    for i, ch in enumerate(s):
        o = ord(ch)
        if o < _LOW or o > _HIGH:
            raise Graph6ParseError(f"character {ch!r} outside graph6 range", base + i)
        vals.append(o - _LOW)

    if vals[0] < 63:
        n = vals[0]
        body_at = 1
    else:
        # '~' prefix: 18-bit size in the next three characters
        if len(vals) < 4:
            raise Graph6ParseError("truncated extended size field", base + len(s))
        if vals[1] == 63:
            raise Graph6ParseError("36-bit graph6 sizes unsupported", base + 1)
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body_at = 4
    if n > MAX_VERTICES:
        raise Graph6ParseError(f"graph order {n} exceeds supported {MAX_VERTICES}", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - body_at
    if have < need:
        raise Graph6ParseError(f"body truncated: need {need} characters, got {have}", base + len(s))
    if have > need:
        raise Graph6ParseError("trailing characters after graph6 body", base + body_at + need)

    adj = [0] * n
    bit = 0
    for idx in range(need):
        group = vals[body_at + idx]
        for b in range(5, -1, -1):
            if bit >= nbits:
                break
            if group >> b & 1:
                i, j = _pair_at(bit)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(adj))


def _pair_at(bit: int) -> tuple[int, int]:
    # bits run x(0,1), x(0,2), x(1,2), x(0,3), ... : column j starts at j(j-1)/2
    j = 1
    while (j + 1) * j // 2 <= bit:
        j += 1
    return bit - j * (j - 1) // 2, j


def write_graph6_file(path: str, graphs) -> int:
    """Write one graph6 line per graph; returns the number of lines."""
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
            count += 1
    return count
