import time

import pytest

from mdspace.classify import classify
from mdspace.convergence import Mode
from mdspace.poset import FinitePoset
from mdspace.witness import (
    I0, Chain, ChainTail, Example63, Fin, FiniteSet, IdealDescriptor, OmegaChain, SymSet, TailUnion,
    WitnessError, descriptor_completeness, example63_core, example63_facts, get_witness,
    omega_chain_facts, parse_ideal, parse_net, parse_point, self_check, truncate, truncate_dsl,
    w_classify, w_converges, w_converges_mode, w_order, w_set_way_below_d, w_way_below_points,
    witness_catalog,
)
from mdspace.space import load_space

A, INF = Fin("a"), Fin("inf")
E63, OMEGA = Example63(), OmegaChain()


def test_catalogue():
    names = [w.name for w in witness_catalog()]
    assert "Example63" in names and "OmegaChain" in names
    assert get_witness("example63") == E63
    with pytest.raises(WitnessError):
        get_witness("nope")


def test_order():
    assert w_order(E63, A, INF)
    assert not w_order(E63, A, Chain("N", 5))
    assert w_order(E63, Chain("N", 2), Chain("N", 9))
    with pytest.raises(WitnessError):
        w_order(E63, Fin("b"), A)


def test_scott_convergence():
    assert w_converges(E63, ChainTail("N", 0), A)
    assert not w_converges(OMEGA, FiniteSet((Chain("N", 3),)), Chain("N", 5))


def test_directed_validation():
    with pytest.raises(WitnessError):
        E63.validate(FiniteSet((A, Chain("N", 1))))
    with pytest.raises(WitnessError):
        E63.validate(TailUnion(ChainTail("N", 2), (A,)))
    E63.validate(TailUnion(ChainTail("N", 2), (Chain("N", 0),)))


def test_way_below():
    for n in (0, 7, 100):
        assert w_set_way_below_d(E63, (Chain("N", n), A), A)
    assert w_way_below_points(E63, A) == []


def test_classification():
    cls = w_classify(E63)
    assert cls.sets["locally_hypercompact"] and cls.sets["monotone_determined"]
    assert not cls.sets["c_space"] and not cls.sets["d_meet_continuous"]
    assert w_classify(OMEGA).sets["c_space"]


def test_alternating_net():
    alt = parse_net("alt:a")
    assert w_converges_mode(E63, alt, I0, Mode.IGS, A)
    assert not w_converges_mode(E63, alt, I0, Mode.IS, A)
    with pytest.raises(WitnessError):
        w_converges_mode(E63, alt, I0, Mode.LIMINF, A)


def test_constant_nets():
    triv = IdealDescriptor("FiniteGenerated", ())
    pts = E63.points(4)
    for y in pts:
        for x in pts:
            assert w_converges_mode(E63, parse_net(f"const:{y}"), triv, Mode.IS, x) == w_order(E63, x, y)


def test_symbolic_sets():
    s = SymSet.make([Chain("N", 7), A], {"N": 5})
    assert Chain("N", 6) in s and Chain("N", 500) in s and Chain("N", 4) not in s
    assert A in s and INF not in s
    assert s == SymSet.make([A], {"N": 5})


def test_parsers():
    assert parse_point("5") == Chain("N", 5)
    assert parse_point("inf") == parse_point("∞") == INF
    assert parse_ideal("i0") == I0
    assert parse_ideal("powerset").proper is False
    with pytest.raises(WitnessError):
        parse_net("alt")
    with pytest.raises(WitnessError):
        parse_point("")


def test_truncations():
    t = truncate(E63, 3)
    assert t.n == 5 and classify(t).passed
    assert truncate(OMEGA, 4).poset == FinitePoset.chain(4)
    assert load_space(truncate_dsl(E63, 3)) == t


def test_self_check_and_descriptors():
    for w in witness_catalog():
        assert self_check(w).passed
        assert descriptor_completeness(w).passed


def test_fact_suites():
    assert example63_facts().passed
    assert omega_chain_facts().passed


def test_core_facts_are_fast():
    t0 = time.perf_counter()
    r = example63_core()
    assert r.passed and time.perf_counter() - t0 < 1.0
