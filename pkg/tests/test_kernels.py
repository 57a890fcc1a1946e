import pytest

from loconn import _kernels_py as py
from loconn import kernels
from loconn.catalog import petersen

from conftest import random_graph

cy = pytest.importorskip("loconn._kernels_c")


def test_selected_backend():
    assert kernels.BACKEND in ("cython", "python")


def test_backends_agree(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        assert py.cyclable_table(g.n, g.adj) == cy.cyclable_table(g.n, g.adj)
        if g.n <= 7:
            assert py.canonical_code(g.n, g.adj) == cy.canonical_code(g.n, g.adj)
        h = random_graph(rng, rng.randint(1, 5), rng.random())
        order = tuple(range(h.n))
        allowed = rng.getrandbits(g.n) | 1 if g.n else 0
        required = allowed & rng.getrandbits(g.n)
        assert (py.embed(g.n, g.adj, h.n, h.adj, order, allowed, required)
                == cy.embed(g.n, g.adj, h.n, h.adj, order, allowed, required))


def test_backends_agree_on_petersen():
    g = petersen()
    assert py.cyclable_table(g.n, g.adj) == cy.cyclable_table(g.n, g.adj)
