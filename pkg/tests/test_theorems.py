import pytest

from loconn.catalog import PatternId, complete, cycle, named_graph, octahedron
from loconn.enumeration import enumerate_graphs
from loconn.graph import to_mask
from loconn.theorems import (
    HypothesisError,
    Status,
    TheoremId,
    criterion_disagreements,
    extendability_criterion,
    hypothesis_membership,
    lemma_audit,
    lemma_criterion,
    proposition_lattice_checks,
    verify_all,
    verify_theorem,
)

K113 = named_graph(PatternId.K113)
X = named_graph(PatternId.XGRAPH)
FCE_CLASSES = {TheoremId.T_PAW_II, TheoremId.T_GEM, TheoremId.T_K1K1P3, TheoremId.T_TRIPLE,
               TheoremId.T6, TheoremId.COR1, TheoremId.COR2, TheoremId.T_ZHANG}


def test_criterion_examples():
    assert extendability_criterion(K113, to_mask([0, 1, 2]))
    assert not extendability_criterion(K113, to_mask([0, 1, 2, 3]))
    assert extendability_criterion(complete(4), 0b0111)
    with pytest.raises(HypothesisError):
        extendability_criterion(cycle(5), 0b11111)


def test_lemma_audit_examples():
    assert all(lemma_audit(K113).values())
    assert all(lemma_audit(complete(4)).values())
    diamond = named_graph(PatternId.K1P3)
    assert all(lemma_audit(diamond).values())
    with pytest.raises(HypothesisError):
        lemma_audit(X)


def test_membership_examples():
    k113 = set(hypothesis_membership(K113))
    assert {TheoremId.T_PAW_I, TheoremId.T_PAW_II} <= k113
    assert not k113 & {TheoremId.T_GEM, TheoremId.T_K1K1P3, TheoremId.T_TRIPLE}
    octa = set(hypothesis_membership(octahedron()))
    assert {TheoremId.T_PAW_I, TheoremId.T_PAW_II, TheoremId.T6, TheoremId.COR1, TheoremId.COR2} <= octa
    assert not set(hypothesis_membership(X)) & FCE_CLASSES


def test_verdict_examples():
    v = verify_theorem(K113, TheoremId.T_PAW_II)
    assert v.status is Status.VERIFIED
    assert verify_theorem(octahedron(), TheoremId.T6).status is Status.VERIFIED
    assert verify_theorem(cycle(5), TheoremId.T_PAW_I).status is Status.NOT_APPLICABLE
    assert verify_theorem(X, TheoremId.P2).status is Status.VERIFIED
    assert verify_theorem(K113, TheoremId.P2).status is Status.VERIFIED


def test_lattice_checks():
    checks = proposition_lattice_checks()
    assert checks and all(checks.values()), [k for k, v in checks.items() if not v]


def test_no_violations_up_to_six():
    for n in range(3, 7):
        for g in enumerate_graphs(n, connected_only=True):
            for t, v in verify_all(g).items():
                assert v.status is not Status.VIOLATION, (t, g)
            if TheoremId.L1 in hypothesis_membership(g):
                assert criterion_disagreements(g) == []


def test_criterion_is_sharp_outside_the_class():
    # C_5 with a hanging path 0-5-6: vertex 5 has an outside neighbor, yet nothing extends the pentagon.
    from loconn.graph import Graph
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])
    assert lemma_criterion(g, 0b11111)
    assert criterion_disagreements(g) == [0b11111]
