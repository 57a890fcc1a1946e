"""Executable form of the counting argument behind the common-neighbor theorem.

Given a cycle ``c`` with a fixed cyclic order and an outside vertex ``z``,
every neighbor ``u`` of ``z`` on ``c`` gets three vertex sets::

    A(u) = {v in N(u) & N(u+) & N(z) & V(c) : v+ not in N(u)}
    B(u) = {v in N(u) & N(u+) & N(z) & V(c) : v+ in N(u)}
    C(u) = {v in (N(u) & N(z) & V(c)) - N(u+) : v+ in N(u)}

where ``v+`` is the successor of ``v`` on ``c``.  Membership ``v in A(u)``
implies ``u in C(v)``, which drives the sequence built by
:func:`trace_sequence`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from .cycles import OrderedCycle, ordered_cycles
from .graph import Graph, bits
from .graph6 import write_graph6
from .local import InducedP3, common_neighbor_sides


class BookkeepingError(AssertionError):
    """A counting identity of the sequence construction failed."""


@dataclass(frozen=True)
class AbcSets:
    a: int
    b: int
    c: int


def _check_config(g: Graph, cyc: OrderedCycle, z: int, u: int) -> None:
    if z in cyc:
        raise ValueError(f"z={z} lies on the cycle")
    if u not in cyc:
        raise ValueError(f"u={u} is not on the cycle")
    if not g.has_edge(z, u):
        raise ValueError(f"z={z} is not adjacent to u={u}")


def abc_partition(g: Graph, cyc: OrderedCycle, z: int, u: int) -> AbcSets:
    _check_config(g, cyc, z, u)
    return _abc(g, cyc, z, u)


def _abc(g: Graph, cyc: OrderedCycle, z: int, u: int) -> AbcSets:
    adj = g.adj
    on_cycle = cyc.vertex_set
    nu = adj[u]
    nup = adj[cyc.succ(u)]
    base = nu & adj[z] & on_cycle
    a = b = c = 0
    for v in bits(base):
        succ_in = nu >> cyc.succ(v) & 1
        if nup >> v & 1:
            if succ_in:
                b |= 1 << v
            else:
                a |= 1 << v
        elif succ_in:
            c |= 1 << v
    return AbcSets(a, b, c)


def abc_laws_hold(g: Graph, cyc: OrderedCycle, z: int, u: int, sets: AbcSets) -> bool:
    """Pairwise disjoint, inside ``V(c)``, and ``A | B == N(u) & N(u+) & N(z) & V(c)``."""
    on_cycle = cyc.vertex_set
    if sets.a & sets.b or sets.a & sets.c or sets.b & sets.c:
        return False
    if (sets.a | sets.b | sets.c) & ~on_cycle:
        return False
    common = g.adj[u] & g.adj[cyc.succ(u)] & g.adj[z] & on_cycle
    return sets.a | sets.b == common


def gain_hypotheses_hold(g: Graph, cyc: OrderedCycle, z: int, u: int) -> bool:
    """The situation in which ``|A(u)| > |C(u)|`` is derived.

    ``z`` misses the successor of each of its cycle neighbors, successors of
    distinct cycle neighbors of ``z`` are nonadjacent, and every common
    neighbor of ``u``, ``u+`` and ``z`` lies on the cycle.
    """
    adj = g.adj
    nbrs = list(bits(adj[z] & cyc.vertex_set))
    succs = [cyc.succ(x) for x in nbrs]
    if any(adj[z] >> s & 1 for s in succs):
        return False
    for i in range(len(succs)):
        for j in range(i + 1, len(succs)):
            if adj[succs[i]] >> succs[j] & 1:
                return False
    return not (adj[u] & adj[cyc.succ(u)] & adj[z] & ~cyc.vertex_set)


@dataclass(frozen=True)
class TraceResult:
    """``stalled`` with the last index ``k``, or ``bound_exceeded``."""

    stalled: bool
    k: int
    sequence: Tuple[int, ...]

    @property
    def bound_exceeded(self) -> bool:
        return not self.stalled


@dataclass
class TraceState:
    k: int
    sequence: List[int]
    a_k: Dict[int, int] = field(default_factory=dict)
    c_k: Dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(m.bit_count() for m in self.a_k.values()) + \
            sum(m.bit_count() for m in self.c_k.values())

    def check(self, a_full: Dict[int, int], c_full: Dict[int, int]) -> None:
        if self.total() != 2 * (self.k - 1):
            raise BookkeepingError(f"sum of |A_k|+|C_k| is {self.total()}, expected {2 * (self.k - 1)}")
        first, last = self.sequence[0], self.sequence[-1]
        for x in self.a_k:
            if self.a_k[x] & ~a_full[x] or self.c_k[x] & ~c_full[x]:
                raise BookkeepingError(f"A_k or C_k escaped its bound at x={x}")
            diff = self.a_k[x].bit_count() - self.c_k[x].bit_count()
            want = 0
            if first != last:
                want = 1 if x == first else -1 if x == last else 0
            if diff != want:
                raise BookkeepingError(f"|A_k|-|C_k| is {diff} at x={x}, expected {want}")


def trace_sequence(g: Graph, cyc: OrderedCycle, z: int, u1: int) -> TraceResult:
    """Follow ``u_{k+1}`` = smallest vertex of ``A(u_k) - A_k(u_k)`` until none is left.

    The bookkeeping identities are verified after every step
    (:class:`BookkeepingError` on failure).  Returns ``bound_exceeded`` when
    ``k`` passes ``n(c)**2 + 1``.
    """
    _check_config(g, cyc, z, u1)
    nbrs = list(bits(g.adj[z] & cyc.vertex_set))
    sets = {x: _abc(g, cyc, z, x) for x in nbrs}
    return _trace(cyc, u1, {x: s.a for x, s in sets.items()}, {x: s.c for x, s in sets.items()})


def _trace(cyc, u1, a_full, c_full) -> TraceResult:
    bound = cyc.order ** 2 + 1
    state = TraceState(1, [u1], {x: 0 for x in a_full}, {x: 0 for x in a_full})
    state.check(a_full, c_full)
    while True:
        uk = state.sequence[-1]
        choices = a_full[uk] & ~state.a_k[uk]
        if not choices:
            return TraceResult(True, state.k, tuple(state.sequence))
        if state.k >= bound:
            return TraceResult(False, state.k, tuple(state.sequence))
        nxt = (choices & -choices).bit_length() - 1
        if state.c_k[nxt] >> uk & 1:
            raise BookkeepingError(f"u_k={uk} already in C_k(u_(k+1)={nxt})")
        state.a_k[uk] |= 1 << nxt
        state.c_k[nxt] |= 1 << uk
        state.k += 1
        state.sequence.append(nxt)
        state.check(a_full, c_full)


@dataclass
class MachineryTally:
    configurations: int = 0
    law_failures: int = 0
    gain_cases: int = 0
    local_gain_cases: int = 0
    gain_failures: int = 0
    traces: int = 0
    trace_steps: int = 0
    bound_exceeded: int = 0
    bookkeeping_failures: int = 0
    failures: List[str] = field(default_factory=list)

    def merge(self, other: "MachineryTally") -> None:
        for name in ("configurations", "law_failures", "gain_cases", "local_gain_cases", "gain_failures",
                     "traces", "trace_steps", "bound_exceeded", "bookkeeping_failures"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.failures.extend(other.failures)

    @property
    def clean(self) -> bool:
        return not (self.law_failures or self.gain_failures or self.bound_exceeded
                    or self.bookkeeping_failures)


def configurations(g: Graph) -> Iterator[Tuple[OrderedCycle, int]]:
    """Every directed cycle paired with every outside vertex that has a neighbor on it."""
    for cyc in ordered_cycles(g):
        on = cyc.vertex_set
        for z in bits(g.all_vertices & ~on):
            if g.adj[z] & on:
                yield cyc, z


def audit_machinery(g: Graph, whole_graph_condition: bool) -> MachineryTally:
    """Run the set laws, the gain inequality and the tracer on every configuration of ``g``.

    The gain ``|A(u)| > |C(u)|`` is checked in two settings:
    ``gain_cases`` when ``g`` satisfies the common-neighbor condition
    everywhere (``whole_graph_condition``), and ``local_gain_cases`` whenever
    the condition holds on the one induced path ``u+ - u - z`` that the
    counting actually uses.
    """
    tally = MachineryTally()
    for cyc, z in configurations(g):
        nbrs = list(bits(g.adj[z] & cyc.vertex_set))
        sets = {x: _abc(g, cyc, z, x) for x in nbrs}
        for u in nbrs:
            tally.configurations += 1
            s = sets[u]
            if not abc_laws_hold(g, cyc, z, u, s):
                tally.law_failures += 1
                tally.failures.append(f"laws {write_graph6(g)} {cyc.vertices} z={z} u={u}")
            if not gain_hypotheses_hold(g, cyc, z, u):
                continue
            up = cyc.succ(u)
            common, outside = common_neighbor_sides(g, InducedP3(min(up, z), u, max(up, z)))
            gained = s.a.bit_count() > s.c.bit_count()
            if common > outside:
                tally.local_gain_cases += 1
                if not gained:
                    tally.gain_failures += 1
                    tally.failures.append(f"gain {write_graph6(g)} {cyc.vertices} z={z} u={u}")
            if whole_graph_condition:
                tally.gain_cases += 1
                if not gained:
                    tally.gain_failures += 1
                    tally.failures.append(f"gain {write_graph6(g)} {cyc.vertices} z={z} u={u}")
        a_full = {x: s.a for x, s in sets.items()}
        c_full = {x: s.c for x, s in sets.items()}
        for u1 in nbrs:
            tally.traces += 1
            try:
                res = _trace(cyc, u1, a_full, c_full)
            except BookkeepingError as exc:
                tally.bookkeeping_failures += 1
                tally.failures.append(f"bookkeeping {write_graph6(g)} {cyc.vertices} z={z}: {exc}")
                continue
            tally.trace_steps += res.k
            if res.bound_exceeded:
                tally.bound_exceeded += 1
                tally.failures.append(f"bound {write_graph6(g)} {cyc.vertices} z={z} u1={u1}")
    return tally
