import itertools

import pytest
from hypothesis import given

from loconn.catalog import PatternId, complete, cycle, empty, named_graph, path, union_of
from loconn.graph import induce, to_mask
from loconn.induced import (
    contains_induced,
    find_induced,
    induced_subgraphs,
    is_family_free,
    is_induced_subgraph_of,
    witness_set,
)

from conftest import graphs

PATTERNS = [named_graph(p) for p in (PatternId.CLAW, PatternId.PAW, PatternId.K1P3, PatternId.K113,
                                     PatternId.GEM, PatternId.K1_K1UP3)] + [path(3), path(4), cycle(4), empty(3)]


def brute_embeddings(host, pattern):
    """Oracle: every injection, kept if it preserves edges and non-edges."""
    out = []
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[a], image[b]) == pattern.has_edge(a, b)
               for a in range(pattern.n) for b in range(a + 1, pattern.n)):
            out.append(image)
    return out


def induced(g, vs):
    return induce(g, to_mask(vs))


def test_examples():
    w = find_induced(cycle(5), path(4))
    assert w is not None and w.host_vertices == (0, 1, 2, 3)
    assert find_induced(named_graph(PatternId.K113), named_graph(PatternId.PAW)) is None
    assert find_induced(named_graph(PatternId.XGRAPH), named_graph(PatternId.K113)) is None


def test_family_free_examples():
    assert is_family_free(complete(4), [named_graph(PatternId.PAW)])
    assert is_family_free(named_graph(PatternId.GEM), [named_graph(PatternId.CLAW)])
    x = named_graph(PatternId.XGRAPH)
    assert not is_family_free(x, [named_graph(PatternId.CLAW)])
    w = find_induced(x, named_graph(PatternId.CLAW))
    assert w.mapping[0] == 0 and w.host_vertices == (0, 1, 5, 6)
    assert is_induced_subgraph_of(named_graph(PatternId.CLAW), induced(x, [0, 4, 5, 6]))


def test_subgraph_examples():
    assert is_induced_subgraph_of(path(3), named_graph(PatternId.CLAW))
    assert not is_induced_subgraph_of(named_graph(PatternId.K113), named_graph(PatternId.XGRAPH))
    x = named_graph(PatternId.XGRAPH)
    w = find_induced(x, named_graph(PatternId.GEM))
    assert w is not None and w.is_valid(x, named_graph(PatternId.GEM))
    assert witness_set(w) in {s for s in range(1 << 7) if bin(s).count("1") == 5}


def test_empty_pattern_and_too_large():
    assert not contains_induced(complete(3), complete(4))
    assert contains_induced(union_of(complete(2), empty(1)), empty(2))


def test_induced_subgraphs_cover_all_sets():
    g = cycle(4)
    sets = [s for s, _ in induced_subgraphs(g)]
    assert len(sets) == 15 and to_mask([0, 1, 2, 3]) in sets


@pytest.mark.parametrize("pattern", PATTERNS, ids=lambda p: f"n{p.n}m{p.edge_count()}")
def test_against_brute_force_small_hosts(pattern, rng):
    from conftest import random_graph
    for _ in range(60):
        host = random_graph(rng, rng.randint(3, 7), rng.random())
        brute = brute_embeddings(host, pattern)
        w = find_induced(host, pattern)
        assert contains_induced(host, pattern) == bool(brute)
        if not brute:
            assert w is None
            continue
        assert w.is_valid(host, pattern)
        least_set = min(tuple(sorted(b)) for b in brute)
        assert w.host_vertices == least_set
        assert w.mapping == min(b for b in brute if tuple(sorted(b)) == least_set)


@given(graphs(max_n=8))
def test_witness_revalidates(host):
    for pattern in PATTERNS:
        w = find_induced(host, pattern)
        if w is not None:
            assert w.is_valid(host, pattern)
