"""Local hypotheses on neighborhoods: locally connected, locally Ore, locally
Dirac, and the common-neighbor inequality on induced paths ``vuw``.

Vertex-set arithmetic is bitwise: ``N(u) & N(v)`` is the common
neighborhood, ``popcount`` its size.
"""

from __future__ import annotations

from typing import Any, Iterator, NamedTuple, Optional

from .graph import Graph, bits, induce, is_connected_set


class InducedP3(NamedTuple):
    """Induced path ``v - u - w`` with centre ``u`` and ``v < w``."""

    v: int
    u: int
    w: int


class ConditionReport(NamedTuple):
    holds: bool
    witness: Optional[Any] = None

    def __bool__(self):
        return self.holds


def induced_p3s(g: Graph) -> Iterator[InducedP3]:
    """Every induced P3, by centre then by end pair, each once."""
    for u in range(g.n):
        nu = g.adj[u]
        for v in bits(nu):
            # later neighbors of u that miss v
            for w in bits(nu & ~g.adj[v] & ~((2 << v) - 1)):
                yield InducedP3(v, u, w)


def is_locally_connected(g: Graph) -> ConditionReport:
    """Each open neighborhood must induce a connected graph; an empty one does not."""
    for u in range(g.n):
        if not is_connected_set(g, g.adj[u]):
            return ConditionReport(False, u)
    return ConditionReport(True)


def ore_margin(g: Graph, p: InducedP3) -> int:
    """``|N(u)∩N(v)| + |N(u)∩N(w)| - d(u)``; the Ore condition asks for >= 0."""
    nu = g.adj[p.u]
    return (nu & g.adj[p.v]).bit_count() + (nu & g.adj[p.w]).bit_count() - nu.bit_count()


def is_locally_ore(g: Graph) -> ConditionReport:
    for p in induced_p3s(g):
        if ore_margin(g, p) < 0:
            return ConditionReport(False, p)
    return ConditionReport(True)


def neighborhood_min_degree(g: Graph, u: int) -> int:
    """Minimum degree of ``G[N(u)]``, taken as 0 for an empty neighborhood."""
    nu = g.adj[u]
    if not nu:
        return 0
    return min((g.adj[v] & nu).bit_count() for v in bits(nu))


def is_locally_dirac(g: Graph) -> ConditionReport:
    for u in range(g.n):
        if 2 * neighborhood_min_degree(g, u) < g.degree(u):
            return ConditionReport(False, u)
    return ConditionReport(True)


def common_neighbor_sides(g: Graph, p: InducedP3):
    """``(|N(u)∩N(v)∩N(w)|, |N(u) minus (N[v]∪N[w])|)`` for the path ``p``."""
    nu, nv, nw = g.adj[p.u], g.adj[p.v], g.adj[p.w]
    common = (nu & nv & nw).bit_count()
    outside = (nu & ~(nv | nw | (1 << p.v) | (1 << p.w))).bit_count()
    return common, outside


def satisfies_common_neighbor_condition(g: Graph) -> ConditionReport:
    """Strict inequality common > outside on every induced P3.

    The witness is the most violated path (largest ``outside - common``),
    earliest in :func:`induced_p3s` order among equals.
    """
    worst = None
    worst_deficit = -1
    for p in induced_p3s(g):
        common, outside = common_neighbor_sides(g, p)
        deficit = outside - common
        if deficit >= 0 and deficit > worst_deficit:
            worst, worst_deficit = p, deficit
    return ConditionReport(worst is None, worst)


def inclusion_exclusion_holds(g: Graph, p: InducedP3) -> bool:
    """``d(u) = 2 + |N(u)∩N(v)| + |N(u)∩N(w)| - |N(u)∩N(v)∩N(w)| + |N(u) minus (N[v]∪N[w])|``."""
    nu = g.adj[p.u]
    common, outside = common_neighbor_sides(g, p)
    rhs = (2 + (nu & g.adj[p.v]).bit_count() + (nu & g.adj[p.w]).bit_count()
           - common + outside)
    return nu.bit_count() == rhs


def neighborhood_graph(g: Graph, u: int) -> Optional[Graph]:
    nu = g.adj[u]
    return induce(g, nu) if nu else None
