from hypothesis import given

from loconn.catalog import PatternId, complete, cycle, named_graph, octahedron
from loconn.graph import bits
from loconn.local import (
    InducedP3,
    common_neighbor_sides,
    inclusion_exclusion_holds,
    induced_p3s,
    is_locally_connected,
    is_locally_dirac,
    is_locally_ore,
    neighborhood_graph,
    ore_margin,
    satisfies_common_neighbor_condition,
)

from conftest import graphs

K113 = named_graph(PatternId.K113)
X = named_graph(PatternId.XGRAPH)


def test_induced_p3_examples():
    assert list(induced_p3s(complete(5))) == []
    assert len(list(induced_p3s(cycle(5)))) == 5
    ps = list(induced_p3s(K113))
    assert len(ps) == 6 and {p.u for p in ps} == {0, 1}


def test_locally_connected_examples():
    assert is_locally_connected(K113)
    rep = is_locally_connected(cycle(4))
    assert not rep and rep.witness == 0
    assert is_locally_connected(X)


def test_locally_ore_examples():
    assert is_locally_ore(complete(4))
    assert is_locally_ore(octahedron())
    assert not is_locally_ore(cycle(5))


def test_locally_dirac_examples():
    assert is_locally_dirac(octahedron())
    rep = is_locally_dirac(K113)
    assert not rep and rep.witness in (0, 1)
    assert is_locally_dirac(complete(3))


def test_common_neighbor_examples():
    assert satisfies_common_neighbor_condition(octahedron())
    assert not satisfies_common_neighbor_condition(cycle(5))
    rep = satisfies_common_neighbor_condition(X)
    assert not rep
    assert rep.witness == InducedP3(4, 0, 5)
    assert common_neighbor_sides(X, rep.witness) == (0, 2)


def test_neighborhood_graph():
    nb = neighborhood_graph(X, 0)
    assert (nb.n, nb.edge_count()) == (6, 6)
    assert neighborhood_graph(complete(1), 0) is None


@given(graphs(max_n=9))
def test_p3s_are_induced_and_complete(g):
    got = set(induced_p3s(g))
    want = {InducedP3(v, u, w) for u in range(g.n) for v in bits(g.adj[u]) for w in bits(g.adj[u])
            if v < w and not g.has_edge(v, w)}
    assert got == want


@given(graphs(max_n=9))
def test_condition_chain(g):
    if is_locally_dirac(g):
        assert is_locally_ore(g)
    if is_locally_ore(g):
        assert satisfies_common_neighbor_condition(g)
    for p in induced_p3s(g):
        assert inclusion_exclusion_holds(g, p)
        if ore_margin(g, p) >= 0:
            common, outside = common_neighbor_sides(g, p)
            assert common >= 2 + outside
