"""Induced-subgraph containment (F-free testing) with deterministic witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from . import kernels
from .graph import Graph, induce, to_mask


@dataclass(frozen=True)
class InducedWitness:
    """``mapping[p]`` is the host vertex playing pattern vertex ``p``."""

    mapping: Tuple[int, ...]

    @property
    def host_vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.mapping))

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        m = self.mapping
        if len(m) != pattern.n or len(set(m)) != len(m):
            return False
        return all(pattern.has_edge(a, b) == host.has_edge(m[a], m[b])
                   for a in range(pattern.n) for b in range(a + 1, pattern.n))


def search_order(pattern: Graph) -> List[int]:
    """Degree-descending order in which each vertex is, where possible, adjacent to an earlier one."""
    remaining = set(range(pattern.n))
    placed = 0
    order = []
    while remaining:
        v = max(remaining, key=lambda u: ((pattern.adj[u] & placed).bit_count(),
                                          pattern.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def _embed(host: Graph, pattern: Graph, order, allowed: int, required: int = 0):
    return kernels.embed(host.n, host.adj, pattern.n, pattern.adj, order, allowed, required)


def contains_induced(host: Graph, pattern: Graph) -> bool:
    """Existence test only; cheaper than :func:`find_induced`."""
    if pattern.n > host.n or pattern.edge_count() > host.edge_count():
        return False
    return _embed(host, pattern, search_order(pattern), host.all_vertices) is not None


def find_induced(host: Graph, pattern: Graph) -> Optional[InducedWitness]:
    """An induced copy of ``pattern`` in ``host``, or ``None``.

    The witness uses the lexicographically least host vertex set and, on
    that set, the lexicographically least mapping.
    """
    if not contains_induced(host, pattern):
        return None
    order = search_order(pattern)
    chosen = 0
    last = -1
    for _ in range(pattern.n):
        for c in range(last + 1, host.n):
            allowed = chosen | (host.all_vertices >> c << c)
            if _embed(host, pattern, order, allowed, chosen | (1 << c)) is not None:
                chosen |= 1 << c
                last = c
                break
        else:
            raise AssertionError("lost the witness during lexicographic descent")
    mapping = _embed(host, pattern, list(range(pattern.n)), chosen, chosen)
    return InducedWitness(mapping)


def is_family_free(host: Graph, family: Iterable[Graph]) -> bool:
    return not any(contains_induced(host, f) for f in family)


def is_induced_subgraph_of(f: Graph, h: Graph) -> bool:
    """True iff ``f`` occurs in ``h`` as an induced subgraph."""
    return contains_induced(h, f)


def induced_subgraphs(g: Graph) -> Iterable[Tuple[int, Graph]]:
    """Every nonempty vertex subset with the graph it induces."""
    for s in range(1, 1 << g.n):
        yield s, induce(g, s)


def witness_set(w: InducedWitness) -> int:
    return to_mask(w.mapping)

