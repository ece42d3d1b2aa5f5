"""Immutable bitset-backed simple graphs and distance invariants.

Vertices are the integers ``0..n-1`` and the neighbourhood of each vertex
is stored as a single int bitmask, which keeps the breadth-first sweeps
cheap enough to run exhaustive searches over tens of thousands of small
graphs. Everything is a pure function; operations that would change a
graph return a new one instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

#: Marker used in DistanceMatrix entries for vertex pairs with no path.
UNREACHABLE = -1


class DisconnectedGraphError(ValueError):
    """Raised by operations that are only defined for connected graphs."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour set of ``v`` as a bitmask. Instances are
    immutable (and therefore hashable and safe to share across workers).
    Use :meth:`from_edges` rather than the raw constructor; it validates
    simplicity and symmetry.
    """

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, rejecting loops and duplicates."""
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return tuple(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(higher):
                out.append((u, v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def with_edge(self, u: int, v: int) -> "Graph":
        """New graph with the extra edge (u, v); the edge must not exist yet."""
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if self.adj[u] >> v & 1:
            raise ValueError(f"edge ({u}, {v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply a permutation (``perm[old] = new``) to the vertex labels."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of 0..n-1")
        adj = [0] * self.n
        for old in range(self.n):
            mask = 0
            for w in bits(self.adj[old]):
                mask |= 1 << perm[w]
            adj[perm[old]] = mask
        return Graph(self.n, tuple(adj))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return _reach(self.adj, 0) == (1 << self.n) - 1


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path hop counts; ``UNREACHABLE`` marks no path."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.rows[u][v]


@dataclass(frozen=True)
class Bipartition:
    """The two colour classes of a connected bipartite graph, smaller first."""

    part_p: frozenset[int]
    part_q: frozenset[int]

    @property
    def p(self) -> int:
        return len(self.part_p)

    @property
    def q(self) -> int:
        return len(self.part_q)

    @property
    def sizes(self) -> tuple[int, int]:
        return (self.p, self.q)


def _reach(adj: Sequence[int], start: int) -> int:
    """Bitmask of all vertices reachable from ``start``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _bfs_row(adj: Sequence[int], n: int, start: int) -> list[int]:
    row = [UNREACHABLE] * n
    row[start] = 0
    seen = frontier = 1 << start
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in bits(frontier):
            row[v] = d
    return row


def _bfs_transmission(adj: Sequence[int], full: int, start: int) -> int:
    """Sum of distances from ``start``; -1 when the graph is not connected."""
    seen = frontier = 1 << start
    total = 0
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        total += d * frontier.bit_count()
    if seen != full:
        return -1
    return total


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; disconnected pairs get ``UNREACHABLE``."""
    rows = tuple(tuple(_bfs_row(g.adj, g.n, s)) for s in range(g.n))
    return DistanceMatrix(g.n, rows)


def transmission(g: Graph, v: int) -> int:
    """Sum of distances from ``v`` to every other vertex."""
    g.check_vertex(v)
    t = _bfs_transmission(g.adj, (1 << g.n) - 1, v)
    if t < 0:
        raise DisconnectedGraphError("transmission is undefined for disconnected graphs")
    return t


def transmissions(g: Graph) -> tuple[int, ...]:
    """Transmissions of all vertices (one BFS per vertex)."""
    if g.n == 0:
        raise DisconnectedGraphError("graph has no vertices")
    full = (1 << g.n) - 1
    out = []
    for v in range(g.n):
        t = _bfs_transmission(g.adj, full, v)
        if t < 0:
            raise DisconnectedGraphError("transmissions are undefined for disconnected graphs")
        out.append(t)
    return tuple(out)


def wiener_index(g: Graph) -> int:
    """Sum of shortest-path distances over unordered vertex pairs.

    Equals half the sum of all transmissions; defined for connected
    graphs only.
    """
    total = sum(transmissions(g))
    assert total % 2 == 0
    return total // 2


def bipartition(g: Graph) -> Bipartition | None:
    """Two-colour a connected graph; ``None`` when an odd cycle exists.

    The returned parts satisfy p <= q; on a tie the part containing
    vertex 0 comes first, so the result is deterministic.
    """
    if g.n == 0:
        raise DisconnectedGraphError("graph has no vertices")
    adj = g.adj
    even = frontier = 1
    odd = 0
    seen = 1
    parity = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        parity ^= 1
        if parity:
            odd |= frontier
        else:
            even |= frontier
    if seen != (1 << g.n) - 1:
        raise DisconnectedGraphError("bipartition is ambiguous for disconnected graphs")
    for v in bits(even):
        if adj[v] & even:
            return None
    for v in bits(odd):
        if adj[v] & odd:
            return None
    a = frozenset(bits(even))
    b = frozenset(bits(odd))
    if len(a) < len(b) or (len(a) == len(b) and 0 in a):
        return Bipartition(a, b)
    return Bipartition(b, a)


def is_unicyclic(g: Graph) -> bool:
    """True iff the graph is connected with exactly one cycle (|E| = |V|)."""
    return g.n > 0 and g.num_edges == g.n and g.is_connected()
