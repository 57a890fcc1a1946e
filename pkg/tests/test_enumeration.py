import itertools
import random

import pytest
from hypothesis import given

from loconn.catalog import PatternId, complete, cycle, named_graph, path
from loconn.enumeration import (
    canonical_certificate,
    canonical_form,
    enumerate_graphs,
    enumerate_range,
    is_isomorphic,
)
from loconn.graph import Graph, is_connected

from conftest import graphs


def labeled_classes(n, connected_only):
    """Oracle: every labeled graph, deduplicated by minimum adjacency code over all n! relabelings."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.from_edges(n, edges)
        if connected_only and not is_connected(g):
            continue
        key = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)
        seen.add(key)
    return len(seen)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_match_labeled_oracle(n):
    assert len(list(enumerate_graphs(n))) == labeled_classes(n, False)
    assert len(list(enumerate_graphs(n, connected_only=True))) == labeled_classes(n, True)


def test_known_counts():
    assert [len(list(enumerate_graphs(n))) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert len(enumerate_range(3, 7)) == 2 + 6 + 21 + 112 + 853


def test_small_examples():
    assert len(list(enumerate_graphs(4, connected_only=True))) == 6
    assert len(list(enumerate_graphs(5, connected_only=True))) == 21
    assert len(list(enumerate_graphs(3))) == 4


def test_enumeration_sorted_and_distinct():
    gs = list(enumerate_graphs(6))
    certs = [canonical_certificate(g) for g in gs]
    assert len(set(certs)) == len(certs)
    assert all(canonical_form(g) == g for g in gs)


def test_certificate_examples():
    c4 = cycle(4)
    ref = canonical_certificate(c4)
    for perm in itertools.permutations(range(4)):
        assert canonical_certificate(c4.relabel(perm)) == ref
    assert canonical_certificate(path(4)) != canonical_certificate(named_graph(PatternId.CLAW))
    assert canonical_certificate(named_graph(PatternId.K1P3)) != ref


def test_limits():
    with pytest.raises(ValueError):
        list(enumerate_graphs(9))
    with pytest.raises(ValueError):
        canonical_certificate(complete(11))


def test_hard_regular_pairs(rng):
    # 3-regular on 8 vertices: the cube and the two circulants are pairwise non-isomorphic.
    cube = Graph.from_edges(8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b])
    c1 = Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert not is_isomorphic(cube, c1)
    for _ in range(20):
        perm = list(range(8))
        rng.shuffle(perm)
        assert is_isomorphic(cube, cube.relabel(perm))


@given(graphs(max_n=9))
def test_certificate_invariant_under_relabeling(g):
    perm = list(range(g.n))
    random.Random(g.n * 1000 + g.edge_count()).shuffle(perm)
    h = g.relabel(perm)
    assert canonical_certificate(g) == canonical_certificate(h)
    assert canonical_form(g) == canonical_form(h)
