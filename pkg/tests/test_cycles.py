import itertools

import pytest
from hypothesis import given

from loconn.catalog import PatternId, complete, cycle, named_graph, octahedron, path, petersen
from loconn.cycles import (
    OrderedCycle,
    cycle_on,
    cycle_spectrum,
    cyclable_sets,
    cyclable_table,
    every_vertex_on_triangle,
    extensions,
    girth_circumference,
    hamiltonian_cycle,
    has_cycle_of_order,
    is_cycle_extendable,
    is_fully_cycle_extendable,
    is_hamiltonian,
    is_weakly_pancyclic,
    missing_cycle_orders,
    ordered_cycles,
)
from loconn.graph import bits, induce, members, to_mask

from conftest import graphs, random_graph

K113 = named_graph(PatternId.K113)
X = named_graph(PatternId.XGRAPH)
PAW = named_graph(PatternId.PAW)


def brute_hamiltonian(g):
    """Oracle: try every vertex order starting at 0."""
    if g.n < 3:
        return False
    for rest in itertools.permutations(range(1, g.n)):
        seq = (0,) + rest
        if all(g.has_edge(seq[i], seq[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


def test_girth_circumference_examples():
    assert girth_circumference(cycle(5)) == (5, 5)
    assert girth_circumference(K113) == (3, 4)
    assert girth_circumference(path(4)) is None
    assert girth_circumference(petersen()) == (5, 9)


def test_has_cycle_of_order_examples():
    assert has_cycle_of_order(complete(4), 3) and has_cycle_of_order(complete(4), 4)
    assert not has_cycle_of_order(K113, 5)
    assert not has_cycle_of_order(cycle(6), 4)
    with pytest.raises(ValueError):
        has_cycle_of_order(cycle(6), 2)


def test_hamiltonian_examples():
    assert not is_hamiltonian(X)
    assert not is_hamiltonian(K113)
    for n in range(3, 9):
        c = hamiltonian_cycle(cycle(n))
        assert c is not None and c.order == n
    assert not is_hamiltonian(petersen())


def test_weakly_pancyclic_examples():
    assert is_weakly_pancyclic(K113)
    assert is_weakly_pancyclic(cycle(5))
    assert not is_weakly_pancyclic(petersen())
    assert missing_cycle_orders(petersen()) == (7,)
    assert is_weakly_pancyclic(path(3))


def test_cyclable_sets_examples():
    k4 = list(cyclable_sets(complete(4)))
    assert len(k4) == 5 and k4[-1] == 0b1111
    assert list(cyclable_sets(cycle(5))) == [0b11111]
    assert list(cyclable_sets(PAW)) == [to_mask([0, 2, 3])]


def test_extendability_examples():
    assert is_cycle_extendable(K113, to_mask([0, 1, 2]))
    assert not is_cycle_extendable(K113, to_mask([0, 1, 2, 3]))
    assert is_cycle_extendable(complete(4), 0b0111)
    with pytest.raises(ValueError):
        is_cycle_extendable(K113, to_mask([2, 3, 4]))
    with pytest.raises(ValueError):
        is_cycle_extendable(complete(3), 0b111)


def test_fce_examples():
    for n in range(3, 8):
        assert is_fully_cycle_extendable(complete(n))
    rep = is_fully_cycle_extendable(K113)
    assert not rep and len(rep.witness) == 4
    assert is_fully_cycle_extendable(octahedron())


def test_triangle_examples():
    rep = every_vertex_on_triangle(PAW)
    assert not rep and rep.witness == 1
    assert every_vertex_on_triangle(complete(3))
    assert not every_vertex_on_triangle(cycle(4))


def test_ordered_cycle():
    c = OrderedCycle.of(cycle(5), [0, 1, 2, 3, 4])
    assert c.succ(4) == 0 and c.pred(0) == 4 and 3 in c
    with pytest.raises(ValueError):
        OrderedCycle.of(cycle(5), [0, 2, 1, 3, 4])
    assert cycle_on(K113, to_mask([2, 3, 4])) is None


def test_hamiltonian_matches_permutation_oracle(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(3, 8), rng.uniform(0.2, 0.8))
        assert is_hamiltonian(g) == brute_hamiltonian(g)


def test_table_matches_backtracking(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(3, 8), rng.uniform(0.3, 0.8))
        table = cyclable_table(g)
        for s in range(1 << g.n):
            c = cycle_on(g, s)
            assert bool(table[s]) == (c is not None)
            if c is not None:
                assert c.vertex_set == s
                assert all(g.has_edge(v, c.succ(v)) for v in c.vertices)


@given(graphs(max_n=7))
def test_spectrum_consistency(g):
    orders = cycle_spectrum(g)
    sizes = {s.bit_count() for s in cyclable_sets(g)}
    assert set(orders) == sizes
    for length in range(3, g.n + 1):
        assert has_cycle_of_order(g, length) == (length in sizes)
    gc = girth_circumference(g)
    assert gc == ((min(sizes), max(sizes)) if sizes else None)


@given(graphs(max_n=6))
def test_ordered_cycles_match_sets(g):
    seen = {}
    for c in ordered_cycles(g):
        assert c.vertices[0] == min(c.vertices)
        seen[c.vertex_set] = seen.get(c.vertex_set, 0) + 1
    assert set(seen) == set(cyclable_sets(g))
    # every undirected cycle is produced once per direction
    assert all(k % 2 == 0 for k in seen.values())


@given(graphs(max_n=7))
def test_sequence_level_extendability_matches_sets(g):
    sets = set(cyclable_sets(g))
    for c in ordered_cycles(g):
        s = c.vertex_set
        if s == g.all_vertices:
            continue
        by_sequence = any((s | (1 << u)) in sets for u in bits(g.all_vertices & ~s))
        assert is_cycle_extendable(g, s) == by_sequence
        assert members(extensions(g, s)) == tuple(u for u in bits(g.all_vertices & ~s)
                                                  if cycle_on(g, s | (1 << u)) is not None)
