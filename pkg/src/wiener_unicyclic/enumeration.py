"""Isomorphism-free enumeration of connected unicyclic bipartite graphs.

Strategy: every connected unicyclic bipartite graph is a spanning tree
plus one extra edge, and deleting a cycle edge leaves a tree with the
same colour classes. So for fixed part sizes (p, q) it suffices to take
each unlabeled tree on p+q vertices whose colour classes have sizes
{p, q}, add every non-edge joining the two classes (this closes exactly
one even cycle), and deduplicate the results by canonical form. Trees
come from networkx's unlabeled tree generator; everything downstream is
exact and deterministic: the final stream is sorted by canonical form,
so worker count and generation order never show through.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .canon import CANONICAL_MAX_VERTICES, canonical_form, graph_from_canonical
from .graphs import Graph, bits

DEFAULT_MAX_N = 14


@dataclass(frozen=True)
class EnumSpec:
    """Part sizes to enumerate, plus a guard against runaway orders."""

    p: int
    q: int
    max_n: int = DEFAULT_MAX_N

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if self.q < self.p:
            raise ValueError(f"need p <= q, got ({self.p}, {self.q})")
        if self.max_n > CANONICAL_MAX_VERTICES:
            raise ValueError(
                f"max_n {self.max_n} exceeds canonical-form limit {CANONICAL_MAX_VERTICES}"
            )
        if self.n > self.max_n:
            raise ValueError(f"order {self.n} exceeds max_n {self.max_n}")

    @property
    def n(self) -> int:
        return self.p + self.q


def _trees(n: int) -> list[Graph]:
    """All unlabeled trees on n vertices as bitmask graphs."""
    out = []
    for t in nx.nonisomorphic_trees(n):
        out.append(Graph.from_edges(n, [tuple(sorted(e)) for e in t.edges()]))
    return out


def _tree_color_classes(g: Graph) -> tuple[int, int]:
    """The two colour-class bitmasks of a tree (BFS layering from 0)."""
    even = frontier = 1
    odd = 0
    seen = 1
    parity = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        parity ^= 1
        if parity:
            odd |= frontier
        else:
            even |= frontier
    return even, odd


def _classes_from_trees(trees: list[Graph], p: int, q: int) -> set[bytes]:
    """Canonical forms of all tree-plus-admissible-edge candidates."""
    classes: set[bytes] = set()
    for tree in trees:
        even, odd = _tree_color_classes(tree)
        sizes = sorted((even.bit_count(), odd.bit_count()))
        if sizes != [p, q]:
            continue
        for u in bits(even):
            candidates = odd & ~tree.adj[u]
            for v in bits(candidates):
                classes.add(canonical_form(tree.with_edge(u, v)))
    return classes


def _enumerate_classes(spec: EnumSpec, workers: int = 1) -> set[bytes]:
    trees = _trees(spec.n)
    if workers <= 1 or len(trees) < 2 * workers:
        return _classes_from_trees(trees, spec.p, spec.q)
    chunks = [trees[i::workers] for i in range(workers)]
    merged: set[bytes] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_classes_from_trees, chunks, [spec.p] * workers, [spec.q] * workers):
            merged |= part
    return merged


def enumerate_unicyclic_bipartite(spec: EnumSpec, *, workers: int = 1) -> Iterator[Graph]:
    """One representative per isomorphism class, in canonical-form order.

    The representative itself is canonically labeled, so the stream is
    byte-for-byte identical however the work was split.
    """
    for key in sorted(_enumerate_classes(spec, workers)):
        yield graph_from_canonical(key)


def count_classes(spec: EnumSpec, *, workers: int = 1) -> int:
    """Number of isomorphism classes the stream would yield."""
    return len(_enumerate_classes(spec, workers))
