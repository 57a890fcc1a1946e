"""Cycles: spectrum, hamiltonicity, extendability, full cycle extendability.

Extendability of a cycle only depends on its vertex set (a longer cycle
must contain ``V(C)`` plus one vertex), so most questions are answered
from one table that marks every vertex set inducing a hamiltonian
subgraph.  Such a set is called *cyclable* below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from . import kernels
from .graph import Graph, bits, induce, members
from .local import ConditionReport


@dataclass(frozen=True)
class OrderedCycle:
    """A cycle with a fixed cyclic order ``vertices[0] -> vertices[1] -> ...``."""

    vertices: Tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle repeats a vertex")
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(self.vertices)})

    @classmethod
    def of(cls, g: Graph, vertices: Sequence[int]) -> "OrderedCycle":
        c = cls(tuple(vertices))
        m = len(c.vertices)
        for i, v in enumerate(c.vertices):
            if not g.has_edge(v, c.vertices[(i + 1) % m]):
                raise ValueError(f"{v} and {c.vertices[(i + 1) % m]} are not adjacent")
        return c

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def succ(self, v: int) -> int:
        i = self._pos[v] + 1
        return self.vertices[i if i < len(self.vertices) else 0]

    def pred(self, v: int) -> int:
        return self.vertices[self._pos[v] - 1]

    def __contains__(self, v):
        return v in self._pos


@lru_cache(maxsize=2048)
def cyclable_table(g: Graph) -> bytes:
    """``table[S]`` is 1 iff ``|S| >= 3`` and ``g[S]`` is hamiltonian."""
    return kernels.cyclable_table(g.n, g.adj)


def cycle_spectrum(g: Graph) -> Tuple[int, ...]:
    """Sorted distinct cycle orders present in ``g``."""
    table = cyclable_table(g)
    return tuple(sorted({s.bit_count() for s in range(len(table)) if table[s]}))


def girth_circumference(g: Graph) -> Optional[Tuple[int, int]]:
    orders = cycle_spectrum(g)
    return (orders[0], orders[-1]) if orders else None


def has_cycle_of_order(g: Graph, length: int) -> bool:
    if length < 3:
        raise ValueError("cycles have order at least 3")
    return length in cycle_spectrum(g)


def hamiltonian_cycle(g: Graph) -> Optional[OrderedCycle]:
    """Backtracking search for a spanning cycle.

    The path grows from vertex 0; a branch dies as soon as some unvisited
    vertex has fewer than two usable neighbors (unvisited ones plus the two
    path ends).  Once the path has left vertex 0, an unvisited vertex whose
    only two usable neighbors include the current end must come next.
    """
    n = g.n
    if n < 3:
        return None
    adj = g.adj
    if any(row.bit_count() < 2 for row in adj):
        return None
    full = g.all_vertices
    path = [0]

    def grow(visited: int, end: int) -> bool:
        if visited == full:
            return bool(adj[end] & 1)
        free = full & ~visited
        usable = free | (1 << end) | 1
        forced = None
        for w in bits(free):
            k = (adj[w] & usable).bit_count()
            if k < 2:
                return False
            if k == 2 and end and adj[w] >> end & 1 and forced is None:
                forced = w
        cand = adj[end] & free
        if forced is not None:
            cand &= 1 << forced
        for w in bits(cand):
            path.append(w)
            if grow(visited | (1 << w), w):
                return True
            path.pop()
        return False

    if grow(1, 0):
        return OrderedCycle(tuple(path))
    return None


def is_hamiltonian(g: Graph) -> bool:
    return hamiltonian_cycle(g) is not None


def cycle_on(g: Graph, s: int) -> Optional[OrderedCycle]:
    """A cycle through exactly the vertices of ``s``, mapped back to ``g``'s labels."""
    if s.bit_count() < 3:
        return None
    sub = induce(g, s)
    c = hamiltonian_cycle(sub)
    if c is None:
        return None
    return OrderedCycle(tuple(sub.origin[v] for v in c.vertices))


def is_weakly_pancyclic(g: Graph) -> bool:
    """All cycle orders between girth and circumference occur; vacuously true without cycles."""
    orders = cycle_spectrum(g)
    return not orders or len(orders) == orders[-1] - orders[0] + 1


def missing_cycle_orders(g: Graph) -> Tuple[int, ...]:
    orders = cycle_spectrum(g)
    if not orders:
        return ()
    return tuple(sorted(set(range(orders[0], orders[-1] + 1)) - set(orders)))


def _set_key(s: int):
    return s.bit_count(), members(s)


def cyclable_sets(g: Graph) -> Iterator[int]:
    """Every cyclable vertex set, by size and then lexicographically."""
    table = cyclable_table(g)
    yield from sorted((s for s in range(len(table)) if table[s]), key=_set_key)


def extensions(g: Graph, s: int) -> int:
    """Vertices ``u`` outside ``s`` with ``s + u`` cyclable."""
    table = cyclable_table(g)
    out = 0
    for u in bits(g.all_vertices & ~s):
        if table[s | (1 << u)]:
            out |= 1 << u
    return out


def is_cycle_extendable(g: Graph, s: int) -> bool:
    table = cyclable_table(g)
    if s >= len(table) or not table[s]:
        raise ValueError("vertex set does not carry a cycle")
    if s == g.all_vertices:
        raise ValueError("a spanning cycle cannot be extended")
    return extensions(g, s) != 0


def every_vertex_on_triangle(g: Graph) -> ConditionReport:
    for u in range(g.n):
        nu = g.adj[u]
        if not any(g.adj[v] & nu for v in bits(nu)):
            return ConditionReport(False, u)
    return ConditionReport(True)


def non_extendable_sets(g: Graph, below: Optional[int] = None) -> List[int]:
    """Cyclable sets smaller than ``below`` (default ``n``) that cannot be extended."""
    limit = g.n if below is None else below
    table = cyclable_table(g)
    full = g.all_vertices
    out = []
    for s in range(len(table)):
        if table[s] and s.bit_count() < limit:
            rest = full & ~s
            if not any(table[s | (1 << u)] for u in bits(rest)):
                out.append(s)
    return sorted(out, key=_set_key)


def is_fully_cycle_extendable(g: Graph) -> ConditionReport:
    """Witness: a vertex on no triangle, else the first non-extendable cyclable set as a tuple."""
    tri = every_vertex_on_triangle(g)
    if not tri:
        return tri
    bad = non_extendable_sets(g)
    if bad:
        return ConditionReport(False, members(bad[0]))
    return ConditionReport(True)


def ordered_cycles(g: Graph, s: Optional[int] = None) -> Iterator[OrderedCycle]:
    """Every cycle as a vertex sequence starting at its smallest vertex, in both directions.

    Restricted to vertices of ``s`` when given.  Plain backtracking; this is
    the sequence-level counterpart of the set table.
    """
    allowed = g.all_vertices if s is None else s
    adj = g.adj
    for start in bits(allowed):
        higher = allowed & ~((2 << start) - 1)
        path = [start]

        def walk(end, visited):
            if len(path) >= 3 and adj[end] >> start & 1:
                yield OrderedCycle(tuple(path))
            for w in bits(adj[end] & higher & ~visited):
                path.append(w)
                yield from walk(w, visited | (1 << w))
                path.pop()

        yield from walk(start, 1 << start)
