"""Canonical certificates and generation of all graphs of small order up to isomorphism."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Tuple

from . import kernels
from .graph import Graph, is_connected
from .graph6 import write_graph6

MAX_GENERATED_ORDER = 8


def canonical_form(g: Graph) -> Graph:
    """The representative of the isomorphism class of ``g`` (minimum code)."""
    return _graph_from_code(g.n, kernels.canonical_code(g.n, g.adj))


def canonical_certificate(g: Graph) -> bytes:
    """graph6 bytes of :func:`canonical_form`; equal iff isomorphic at equal order."""
    if g.n > kernels.MAX_CANON_ORDER:
        raise ValueError(f"certificates support orders up to {kernels.MAX_CANON_ORDER}")
    return write_graph6(canonical_form(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count() == h.edge_count() and (
        kernels.canonical_code(g.n, g.adj) == kernels.canonical_code(h.n, h.adj))


def _graph_from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    k = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[int, ...]:
    """Canonical codes of every graph of order ``n``, ascending."""
    if n == 1:
        return (0,)
    codes = set()
    for code in _classes(n - 1):
        base = _graph_from_code(n - 1, code).adj
        new = 1 << (n - 1)
        for nbrs in range(1 << (n - 1)):
            rows = [row | new if nbrs >> v & 1 else row for v, row in enumerate(base)]
            rows.append(nbrs)
            codes.add(kernels.canonical_code(n, rows))
    return tuple(sorted(codes))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class of order ``n``, ordered by certificate.

    Every class of order ``n`` arises by adding a vertex to some class of
    order ``n - 1``, so classes are grown one vertex at a time and deduplicated
    by canonical code.
    """
    if not 1 <= n <= MAX_GENERATED_ORDER:
        raise ValueError(f"built-in generation covers orders 1..{MAX_GENERATED_ORDER}; "
                         "supply larger orders as graph6 files")
    for code in _classes(n):
        g = _graph_from_code(n, code)
        if not connected_only or is_connected(g):
            yield g


def enumerate_range(n_min: int, n_max: int, connected_only: bool = True) -> List[Graph]:
    out: List[Graph] = []
    for n in range(n_min, n_max + 1):
        out.extend(enumerate_graphs(n, connected_only))
    return out
