from hypothesis import given

from loconn.catalog import (
    CATALOG_ENTRIES,
    PatternId,
    complement_of,
    complete,
    cycle,
    empty,
    join_of,
    named_graph,
    octahedron,
    path,
    petersen,
    star,
    union_of,
    wheel,
)
from loconn.enumeration import is_isomorphic
from loconn.graph import degree_profile, is_connected

from conftest import graphs


def test_union_examples():
    g = union_of(empty(1), complete(2))
    assert (g.n, g.edge_count()) == (3, 1)
    g = union_of(empty(1), path(3))
    assert (g.n, g.edge_count()) == (4, 2)
    g = union_of(cycle(3), cycle(3))
    assert (g.n, g.edge_count()) == (6, 6) and not is_connected(g)


def test_join_examples():
    assert is_isomorphic(join_of(empty(1), empty(3)), named_graph(PatternId.CLAW))
    paw = join_of(empty(1), union_of(empty(1), complete(2)))
    assert (paw.n, paw.edge_count()) == (4, 4)
    k113 = join_of(empty(1), join_of(empty(1), empty(3)))
    assert (k113.n, k113.edge_count()) == (5, 7)


def test_complement_examples():
    assert is_isomorphic(complement_of(empty(3)), complete(3))
    assert is_isomorphic(complement_of(cycle(5)), cycle(5))
    paw = named_graph(PatternId.PAW)
    assert complement_of(complement_of(paw)) == paw


def test_named_examples():
    x = named_graph(PatternId.XGRAPH)
    assert (x.n, x.edge_count()) == (7, 12)
    assert degree_profile(x)[2] == (6, 4, 4, 4, 2, 2, 2)
    assert is_isomorphic(named_graph(PatternId.K113), join_of(empty(1), join_of(empty(1), empty(3))))
    assert is_isomorphic(named_graph(PatternId.PAW), join_of(empty(1), union_of(empty(1), complete(2))))
    assert is_isomorphic(named_graph(PatternId.STAR, 4), named_graph(PatternId.CLAW))
    assert is_isomorphic(named_graph(PatternId.GEM), join_of(empty(1), path(4)))


def test_fixed_constructions():
    assert degree_profile(octahedron())[2] == (4,) * 6
    assert degree_profile(wheel(4))[2] == (3, 3, 3, 3, 4)
    assert degree_profile(petersen())[2] == (3,) * 10
    assert degree_profile(star(5))[2] == (4, 1, 1, 1, 1)


def test_catalog_entries_build():
    for label, pid, n in CATALOG_ENTRIES:
        g = named_graph(pid, n)
        assert g.n >= 3, label


@given(graphs())
def test_complement_is_involution(g):
    assert complement_of(complement_of(g)) == g
    assert g.edge_count() + complement_of(g).edge_count() == g.n * (g.n - 1) // 2


@given(graphs(max_n=5), graphs(max_n=5))
def test_join_edge_count(g, h):
    j = join_of(g, h)
    assert j.n == g.n + h.n
    assert j.edge_count() == g.edge_count() + h.edge_count() + g.n * h.n
    assert union_of(g, h).edge_count() == g.edge_count() + h.edge_count()
