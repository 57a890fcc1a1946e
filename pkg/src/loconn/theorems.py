"""Hypotheses and conclusions of the theorems, checked on concrete graphs.

Each :class:`TheoremId` binds a hypothesis predicate and a conclusion
predicate.  :func:`verify_theorem` returns ``NOT_APPLICABLE`` when the
hypothesis fails, ``VERIFIED`` when the conclusion holds and ``VIOLATION``
(with a re-checkable witness) otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional

from .catalog import PatternId, named_graph
from .cycles import (
    cyclable_table,
    cycle_spectrum,
    every_vertex_on_triangle,
    is_cycle_extendable,
    is_fully_cycle_extendable,
    is_weakly_pancyclic,
    missing_cycle_orders,
    non_extendable_sets,
)
from .enumeration import canonical_certificate, is_isomorphic
from .graph import Graph, bits, diameter, distance_sets, induce, is_connected, is_independent, members
from .graph6 import write_graph6
from .induced import contains_induced, is_induced_subgraph_of
from .local import (
    ConditionReport,
    is_locally_connected,
    is_locally_dirac,
    is_locally_ore,
    satisfies_common_neighbor_condition,
)


class TheoremId(Enum):
    L1 = "L1"
    T_PAW_I = "T_PAW_I"
    T_PAW_II = "T_PAW_II"
    P1 = "P1"
    P2 = "P2"
    T_GEM = "T_GEM"
    T_K1K1P3 = "T_K1K1P3"
    T_TRIPLE = "T_TRIPLE"
    T6 = "T6"
    COR1 = "COR1"
    COR2 = "COR2"
    T_ZHANG = "T_ZHANG"


DESCRIPTIONS = {
    TheoremId.L1: "connected locally connected paw-free, n>=3: triangles, diameter<=2, "
                  "N^2(u) independent, extension criterion, sub-circumference cycles extend",
    TheoremId.T_PAW_I: "connected locally connected paw-free, n>=3 => weakly pancyclic",
    TheoremId.T_PAW_II: "connected locally connected paw-free, n>=3 => (FCE <=> 2*delta >= n)",
    TheoremId.P1: "connected locally connected, claw-free or (K_1+P_3)-free, n>=3 => FCE",
    TheoremId.P2: "K_{1,1,3} and X are connected, locally connected and not hamiltonian; X is K_{1,1,3}-free",
    TheoremId.T_GEM: "connected locally connected {K_{1,1,3}, K_1+P_4}-free, n>=3 => FCE",
    TheoremId.T_K1K1P3: "connected locally connected {K_{1,1,3}, K_1+(K_1uP_3)}-free, n>=3 => FCE",
    TheoremId.T_TRIPLE: "connected locally connected {K_1+P_4, K_{1,4}, K_2+(K_1uK_2)}-free, "
                        "n>=3, not K_{1,1,3} => FCE",
    TheoremId.T6: "connected, n>=3, |N(u)&N(v)&N(w)| > |N(u)-(N[v]|N[w])| on every induced vuw => FCE",
    TheoremId.COR1: "connected locally Ore, n>=3 => common-neighbor condition and FCE",
    TheoremId.COR2: "connected locally Dirac, n>=3 => locally Ore and FCE",
    TheoremId.T_ZHANG: "connected locally connected claw-free, n>=3 => FCE",
}


class Status(Enum):
    NOT_APPLICABLE = "not_applicable"
    VERIFIED = "verified"
    VIOLATION = "violation"


@dataclass(frozen=True)
class TheoremVerdict:
    status: Status
    witness: Optional[Any] = None
    detail: str = ""


class HypothesisError(ValueError):
    """Raised when an operation's graph-class hypothesis is not met."""


def _pattern(pid: PatternId) -> Graph:
    return _PATTERNS[pid]


_PATTERNS = {pid: named_graph(pid) for pid in PatternId if not pid.parameterized}


class GraphFacts:
    """Lazily computed predicates of one graph, shared by all theorem checks."""

    def __init__(self, g: Graph):
        self.g = g

    def free_of(self, pid: PatternId) -> bool:
        return not contains_induced(self.g, _pattern(pid))

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def locally_connected(self) -> ConditionReport:
        return is_locally_connected(self.g)

    @cached_property
    def locally_ore(self) -> ConditionReport:
        return is_locally_ore(self.g)

    @cached_property
    def locally_dirac(self) -> ConditionReport:
        return is_locally_dirac(self.g)

    @cached_property
    def common_neighbor_condition(self) -> ConditionReport:
        return satisfies_common_neighbor_condition(self.g)

    @cached_property
    def base(self) -> bool:
        """Connected, order at least 3, locally connected."""
        return self.g.n >= 3 and self.connected and bool(self.locally_connected)

    @cached_property
    def paw_free(self) -> bool:
        return self.free_of(PatternId.PAW)

    @cached_property
    def claw_free(self) -> bool:
        return self.free_of(PatternId.CLAW)

    @cached_property
    def k113_free(self) -> bool:
        return self.free_of(PatternId.K113)

    @cached_property
    def gem_free(self) -> bool:
        return self.free_of(PatternId.GEM)

    @cached_property
    def is_k113(self) -> bool:
        return self.g.n == 5 and is_isomorphic(self.g, _pattern(PatternId.K113))

    @cached_property
    def is_x(self) -> bool:
        return self.g.n == 7 and is_isomorphic(self.g, _pattern(PatternId.XGRAPH))

    @cached_property
    def fce(self) -> ConditionReport:
        return is_fully_cycle_extendable(self.g)

    @cached_property
    def min_degree(self) -> int:
        return min(self.g.degree(u) for u in range(self.g.n))

    @cached_property
    def hamiltonian(self) -> bool:
        return bool(cyclable_table(self.g)[self.g.all_vertices])

    def hypothesis(self, t: TheoremId) -> bool:
        return _HYPOTHESES[t](self)


_HYPOTHESES = {
    TheoremId.L1: lambda f: f.base and f.paw_free,
    TheoremId.T_PAW_I: lambda f: f.base and f.paw_free,
    TheoremId.T_PAW_II: lambda f: f.base and f.paw_free,
    TheoremId.P1: lambda f: f.base and (f.claw_free or f.free_of(PatternId.K1P3)),
    TheoremId.P2: lambda f: f.base and (f.is_k113 or f.is_x),
    TheoremId.T_GEM: lambda f: f.base and f.k113_free and f.gem_free,
    TheoremId.T_K1K1P3: lambda f: f.base and f.k113_free and f.free_of(PatternId.K1_K1UP3),
    TheoremId.T_TRIPLE: lambda f: (f.base and f.gem_free and f.free_of(PatternId.K14)
                                   and f.free_of(PatternId.K2_K1UK2) and not f.is_k113),
    TheoremId.T6: lambda f: f.g.n >= 3 and f.connected and bool(f.common_neighbor_condition),
    TheoremId.COR1: lambda f: f.g.n >= 3 and f.connected and bool(f.locally_ore),
    TheoremId.COR2: lambda f: f.g.n >= 3 and f.connected and bool(f.locally_dirac),
    TheoremId.T_ZHANG: lambda f: f.base and f.claw_free,
}


def lemma_criterion(g: Graph, s: int) -> bool:
    """Some outside vertex with a neighbor in ``s`` has a neighbor outside ``s`` or degree above ``|s|/2``."""
    size = s.bit_count()
    for u in bits(g.all_vertices & ~s):
        nu = g.adj[u]
        if nu & s and (nu & ~s or 2 * nu.bit_count() > size):
            return True
    return False


def extendability_criterion(g: Graph, s: int) -> bool:
    """:func:`lemma_criterion` on a graph of the lemma's class (else :class:`HypothesisError`)."""
    if not _HYPOTHESES[TheoremId.L1](GraphFacts(g)):
        raise HypothesisError("needs a connected locally connected paw-free graph of order >= 3")
    if not cyclable_table(g)[s] or s == g.all_vertices:
        raise ValueError("needs a non-spanning vertex set that carries a cycle")
    return lemma_criterion(g, s)


def criterion_disagreements(g: Graph) -> List[int]:
    """Non-spanning cyclable sets where the criterion and direct extendability differ."""
    table = cyclable_table(g)
    full = g.all_vertices
    return [s for s in range(len(table))
            if table[s] and s != full and lemma_criterion(g, s) != is_cycle_extendable(g, s)]


def lemma_audit(g: Graph, check_hypotheses: bool = True) -> Dict[str, ConditionReport]:
    """Items (i)-(v) of the paw-free lemma evaluated on ``g``."""
    if check_hypotheses and not _HYPOTHESES[TheoremId.L1](GraphFacts(g)):
        raise HypothesisError("needs a connected locally connected paw-free graph of order >= 3")
    out: Dict[str, ConditionReport] = {}
    out["i"] = every_vertex_on_triangle(g)
    d = diameter(g)
    out["ii"] = ConditionReport(d <= 2, None if d <= 2 else d)
    bad = next((u for u in range(g.n) if not is_independent(g, distance_sets(g, u, 2))), None)
    out["iii"] = ConditionReport(bad is None, bad)
    dis = criterion_disagreements(g)
    out["iv"] = ConditionReport(not dis, members(dis[0]) if dis else None)
    orders = cycle_spectrum(g)
    stuck = non_extendable_sets(g, below=orders[-1]) if orders else []
    out["v"] = ConditionReport(not stuck, members(stuck[0]) if stuck else None)
    return out


def hypothesis_membership(g: Graph) -> List[TheoremId]:
    facts = GraphFacts(g)
    return [t for t in TheoremId if facts.hypothesis(t)]


def _fce_verdict(facts: GraphFacts) -> TheoremVerdict:
    rep = facts.fce
    if rep:
        return TheoremVerdict(Status.VERIFIED)
    what = "vertex on no triangle" if isinstance(rep.witness, int) else "non-extendable cycle on"
    return TheoremVerdict(Status.VIOLATION, rep.witness, what)


def _conclusion(facts: GraphFacts, t: TheoremId) -> TheoremVerdict:
    g = facts.g
    if t is TheoremId.L1:
        audit = lemma_audit(g, check_hypotheses=False)
        failed = [k for k, rep in audit.items() if not rep]
        if failed:
            return TheoremVerdict(Status.VIOLATION, {k: audit[k].witness for k in failed},
                                  "lemma items failed: " + ",".join(failed))
        return TheoremVerdict(Status.VERIFIED)
    if t is TheoremId.T_PAW_I:
        if is_weakly_pancyclic(g):
            return TheoremVerdict(Status.VERIFIED)
        return TheoremVerdict(Status.VIOLATION, missing_cycle_orders(g), "missing cycle orders")
    if t is TheoremId.T_PAW_II:
        dirac = 2 * facts.min_degree >= g.n
        if bool(facts.fce) == dirac:
            return TheoremVerdict(Status.VERIFIED)
        if dirac:
            return TheoremVerdict(Status.VIOLATION, facts.fce.witness, "2*delta >= n but not FCE")
        u = min(range(g.n), key=g.degree)
        return TheoremVerdict(Status.VIOLATION, u, "FCE but 2*delta < n (minimum-degree vertex)")
    if t is TheoremId.P2:
        if facts.hamiltonian:
            return TheoremVerdict(Status.VIOLATION, None, "hamiltonian")
        if facts.is_x and not facts.k113_free:
            return TheoremVerdict(Status.VIOLATION, None, "X contains K_{1,1,3}")
        return TheoremVerdict(Status.VERIFIED)
    if t is TheoremId.COR1 and not facts.common_neighbor_condition:
        return TheoremVerdict(Status.VIOLATION, facts.common_neighbor_condition.witness,
                              "locally Ore but common-neighbor condition fails")
    if t is TheoremId.COR2 and not facts.locally_ore:
        return TheoremVerdict(Status.VIOLATION, facts.locally_ore.witness,
                              "locally Dirac but not locally Ore")
    return _fce_verdict(facts)


def verify_theorem(g: Graph, t: TheoremId, facts: Optional[GraphFacts] = None) -> TheoremVerdict:
    facts = facts or GraphFacts(g)
    if not facts.hypothesis(t):
        return TheoremVerdict(Status.NOT_APPLICABLE)
    return _conclusion(facts, t)


def verify_all(g: Graph, theorems: Iterable[TheoremId] = tuple(TheoremId)) -> Dict[TheoremId, TheoremVerdict]:
    facts = GraphFacts(g)
    return {t: verify_theorem(g, t, facts) for t in theorems}


def proposition_lattice_checks() -> Dict[str, bool]:
    """The finitely many facts about K_{1,1,3}, X, K_{1,3} and K_1+P_3 used by both propositions."""
    k113 = _pattern(PatternId.K113)
    x = _pattern(PatternId.XGRAPH)
    claw = _pattern(PatternId.CLAW)
    diamond = _pattern(PatternId.K1P3)
    checks: Dict[str, bool] = {}
    for name, h in (("K113", k113), ("X", x)):
        facts = GraphFacts(h)
        checks[f"{name} connected"] = facts.connected
        checks[f"{name} locally connected"] = bool(facts.locally_connected)
        checks[f"{name} not hamiltonian"] = not facts.hamiltonian
        checks[f"{name} not FCE"] = not facts.fce
    checks["K113 not induced in X"] = not is_induced_subgraph_of(k113, x)
    common_ok = True
    seen = set()
    for s in range(1, 1 << k113.n):
        f = induce(k113, s)
        cert = canonical_certificate(f)
        if cert in seen:
            continue
        seen.add(cert)
        if is_induced_subgraph_of(f, x) and not (
                is_induced_subgraph_of(f, claw) or is_induced_subgraph_of(f, diamond)):
            common_ok = False
    checks["common induced subgraphs of K113 and X lie in K_{1,3} or K_1+P_3"] = common_ok
    # The forbidden pairs of the gem and K_1+(K_1uP_3) theorems have the
    # shape the pair proposition demands.
    for pid in (PatternId.GEM, PatternId.K1_K1UP3):
        f = _pattern(pid)
        checks[f"{pid.value} induced in X"] = is_induced_subgraph_of(f, x)
        checks[f"{pid.value} not induced in K_{{1,3}} or K_1+P_3"] = not (
            is_induced_subgraph_of(f, claw) or is_induced_subgraph_of(f, diamond))
    return checks


def describe_witness(g: Graph, verdict: TheoremVerdict) -> Dict[str, Any]:
    return {"graph6": write_graph6(g), "witness": _jsonable(verdict.witness), "detail": verdict.detail}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (tuple, list)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float) and obj == float("inf"):
        return "inf"
    return obj

