"""Immutable simple graphs on at most 64 vertices, stored as bitset rows.

A vertex set is a plain ``int`` whose bit ``i`` marks vertex ``i``.  Every
operation here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Tuple

MAX_ORDER = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> Tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``adj[u]`` is the neighbor bitset of ``u``.  ``origin`` records, for
    graphs produced by :func:`induce`, which host vertex each vertex came
    from; it takes no part in equality.
    """

    n: int
    adj: Tuple[int, ...]
    origin: Optional[Tuple[int, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency has wrong number of rows")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {u} has a neighbor index >= n")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> int:
        return self.adj[u]

    def closed_neighbors(self, u: int) -> int:
        return self.adj[u] | (1 << u)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which vertex ``u`` becomes ``perm[u]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        rows = [0] * self.n
        for u in range(self.n):
            rows[perm[u]] = to_mask(perm[v] for v in bits(self.adj[u]))
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _check_vertex(g: Graph, u: int) -> None:
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range for order {g.n}")


def component_of(g: Graph, u: int, within: Optional[int] = None) -> int:
    """Vertex set of the component containing ``u`` in ``g[within]``."""
    allowed = g.all_vertices if within is None else within
    seen = frontier = 1 << u
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected_set(g: Graph, s: int) -> bool:
    """True iff ``g[s]`` is connected; the empty set is not."""
    if not s:
        return False
    return component_of(g, (s & -s).bit_length() - 1, s) == s


def distance_sets(g: Graph, u: int, k: int) -> int:
    """Vertices at shortest-path distance exactly ``k`` from ``u``."""
    _check_vertex(g, u)
    if k < 0:
        raise ValueError("distance must be nonnegative")
    seen = level = 1 << u
    for _ in range(k):
        nxt = 0
        for v in bits(level):
            nxt |= g.adj[v]
        level = nxt & ~seen
        if not level:
            return 0
        seen |= level
    return level


def induce(g: Graph, s: int) -> Graph:
    """Subgraph induced by ``s``; vertex ``i`` of the result is the ``i``-th smallest member of ``s``."""
    if not s:
        raise ValueError("cannot induce on the empty set")
    if s & ~g.all_vertices:
        raise ValueError("vertex set has members outside the graph")
    verts = members(s)
    index = {v: i for i, v in enumerate(verts)}
    rows = tuple(to_mask(index[w] for w in bits(g.adj[v] & s)) for v in verts)
    return Graph(len(verts), rows, origin=verts)


def is_connected(g: Graph) -> bool:
    return component_of(g, 0) == g.all_vertices


def eccentricity(g: Graph, u: int) -> float:
    seen = level = 1 << u
    ecc = 0
    while True:
        nxt = 0
        for v in bits(level):
            nxt |= g.adj[v]
        level = nxt & ~seen
        if not level:
            break
        seen |= level
        ecc += 1
    return ecc if seen == g.all_vertices else math.inf


def diameter(g: Graph) -> float:
    """Largest shortest-path distance; ``math.inf`` for disconnected graphs."""
    return max(eccentricity(g, u) for u in range(g.n))


def degree_profile(g: Graph) -> Tuple[int, int, Tuple[int, ...]]:
    """``(min degree, max degree, degrees in vertex order)``."""
    seq = tuple(g.degree(u) for u in range(g.n))
    return min(seq), max(seq), seq


def is_independent(g: Graph, s: int) -> bool:
    return all(not (g.adj[v] & s) for v in bits(s))
