"""Named graphs and the union / join / complement operators used to build them."""

from __future__ import annotations

from enum import Enum
from typing import Optional

from .graph import MAX_ORDER, Graph


def union_of(g: Graph, h: Graph) -> Graph:
    """Disjoint union; the vertices of ``h`` follow those of ``g``."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise ValueError(f"union of order {n} exceeds capacity {MAX_ORDER}")
    rows = g.adj + tuple(row << g.n for row in h.adj)
    return Graph(n, rows)


def join_of(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise ValueError(f"join of order {n} exceeds capacity {MAX_ORDER}")
    g_side = g.all_vertices
    h_side = h.all_vertices << g.n
    rows = tuple(row | h_side for row in g.adj) + tuple((row << g.n) | g_side for row in h.adj)
    return Graph(n, rows)


def complement_of(g: Graph) -> Graph:
    full = g.all_vertices
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


def _need(n: int, least: int, name: str) -> None:
    if n < least:
        raise ValueError(f"{name} needs n >= {least}, got {n}")


def empty(n: int) -> Graph:
    _need(n, 1, "empty graph")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    _need(n, 1, "K_n")
    return complement_of(empty(n))


def path(n: int) -> Graph:
    _need(n, 1, "P_n")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n, 3, "C_n")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """K_{1,n-1}, the centre being vertex 0."""
    _need(n, 1, "K_{1,n-1}")
    return join_of(complete(1), empty(n - 1)) if n > 1 else complete(1)


def x_graph() -> Graph:
    # u0, u1, u2, u3, u1', u2', u3' -> 0..6
    u0, u1, u2, u3, p1, p2, p3 = range(7)
    return Graph.from_edges(7, [
        (u0, u1), (u0, u2), (u0, u3), (u0, p1), (u0, p2), (u0, p3),
        (u1, u2), (u2, u3), (u1, u3), (u1, p1), (u2, p2), (u3, p3),
    ])


def octahedron() -> Graph:
    """K_{2,2,2}; antipodal pairs are (0,1), (2,3), (4,5)."""
    return complement_of(Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)]))


def wheel(rim: int) -> Graph:
    """K_1 + C_rim with the rim on ``0..rim-1`` and the hub last."""
    return join_of(cycle(rim), complete(1))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


class PatternId(Enum):
    KN = "K_n"
    PN = "P_n"
    CN = "C_n"
    STAR = "K_{1,n-1}"
    K113 = "K_{1,1,3}"
    PAW = "K_1+(K_1uK_2)"
    GEM = "K_1+P_4"
    K1_K1UP3 = "K_1+(K_1uP_3)"
    K14 = "K_{1,4}"
    K2_K1UK2 = "K_2+(K_1uK_2)"
    XGRAPH = "X"
    CLAW = "K_{1,3}"
    K1P3 = "K_1+P_3"

    @property
    def parameterized(self) -> bool:
        return self in _PARAMETERIZED


_PARAMETERIZED = {PatternId.KN, PatternId.PN, PatternId.CN, PatternId.STAR}


def named_graph(pid: PatternId, n: Optional[int] = None) -> Graph:
    """Build the named graph ``pid``; parameterized ids need ``n``."""
    if pid.parameterized:
        if n is None:
            raise ValueError(f"{pid.value} requires an order")
        return {PatternId.KN: complete, PatternId.PN: path,
                PatternId.CN: cycle, PatternId.STAR: star}[pid](n)
    if n is not None:
        raise ValueError(f"{pid.value} takes no order parameter")
    k1 = complete(1)
    if pid is PatternId.K113:
        return join_of(k1, join_of(k1, empty(3)))
    if pid is PatternId.PAW:
        return join_of(k1, union_of(k1, complete(2)))
    if pid is PatternId.GEM:
        return join_of(k1, path(4))
    if pid is PatternId.K1_K1UP3:
        return join_of(k1, union_of(k1, path(3)))
    if pid is PatternId.K14:
        return star(5)
    if pid is PatternId.K2_K1UK2:
        return join_of(complete(2), union_of(k1, complete(2)))
    if pid is PatternId.XGRAPH:
        return x_graph()
    if pid is PatternId.CLAW:
        return star(4)
    if pid is PatternId.K1P3:
        return join_of(k1, path(3))
    raise AssertionError(pid)


# Entries printed by the ``catalog`` command: (label, id, order parameter).
CATALOG_ENTRIES = [
    ("K_3", PatternId.KN, 3),
    ("P_4", PatternId.PN, 4),
    ("C_4", PatternId.CN, 4),
    ("K_{1,3}", PatternId.CLAW, None),
    ("K_1+P_3", PatternId.K1P3, None),
    ("K_{1,4}", PatternId.K14, None),
    ("K_{1,1,3}", PatternId.K113, None),
    ("paw", PatternId.PAW, None),
    ("gem", PatternId.GEM, None),
    ("K_1+(K_1uP_3)", PatternId.K1_K1UP3, None),
    ("K_2+(K_1uK_2)", PatternId.K2_K1UK2, None),
    ("X", PatternId.XGRAPH, None),
]
