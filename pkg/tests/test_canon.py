"""Canonical form: invariance, completeness on small orders, limits."""

import itertools
import random

import pytest

from wiener_unicyclic import (
    Graph,
    OnionParams,
    build_cycle,
    build_onion,
    build_path,
    build_star,
    canonical_form,
    random_connected_graph,
)
from wiener_unicyclic.canon import CANONICAL_MAX_VERTICES, graph_from_canonical


def test_cycle_relabeling_invariance():
    g = build_cycle(4)
    base = canonical_form(g)
    for perm in itertools.permutations(range(4)):
        assert canonical_form(g.relabel(list(perm))) == base


def test_onion_swap_symmetry_when_middle_is_single_vertex():
    for a in range(7):
        for b in range(7):
            lhs = canonical_form(build_onion(OnionParams(a, 1, b)))
            rhs = canonical_form(build_onion(OnionParams(b, 1, a)))
            assert lhs == rhs


def test_path_vs_star_differ():
    assert canonical_form(build_path(4)) != canonical_form(build_star(3))


def test_random_relabeling_invariance():
    rng = random.Random(31337)
    for _ in range(500):
        g = random_connected_graph(rng, 2, 12)
        base = canonical_form(g)
        for _ in range(5):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == base


@pytest.mark.parametrize("n,expected_classes", [(2, 2), (3, 4), (4, 11), (5, 34)])
def test_complete_on_all_labeled_graphs(n, expected_classes):
    # distinct canonical forms over all labeled graphs must hit the known
    # number of unlabeled graphs exactly: no collisions, no over-splitting
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for bitsel in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bitsel >> i & 1]
        forms.add(canonical_form(Graph.from_edges(n, edges)))
    assert len(forms) == expected_classes


def test_trivial_orders():
    assert canonical_form(Graph.from_edges(0, [])) == bytes([0])
    assert canonical_form(Graph.from_edges(1, [])) == bytes([1])


def test_size_limit():
    g = Graph.from_edges(CANONICAL_MAX_VERTICES + 1, [])
    with pytest.raises(ValueError):
        canonical_form(g)


def test_canonical_graph_roundtrip():
    rng = random.Random(17)
    for _ in range(100):
        g = random_connected_graph(rng, 2, 12)
        form = canonical_form(g)
        rebuilt = graph_from_canonical(form)
        assert canonical_form(rebuilt) == form
        assert rebuilt.n == g.n and rebuilt.num_edges == g.num_edges
