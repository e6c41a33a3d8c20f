import pytest

from mdspace.convergence import (
    Bounds, ConvergenceError, Mode, Net, converges_mode, directed_set_cases, enumerate_cases,
    igs_converges, igs_converges_families, induced_topology, parse_net,
)
from mdspace.ideal import Ideal, IndexSet, enumerate_ideals, make_I0
from mdspace.poset import FinitePoset, enumerate_posets, to_list
from mdspace.space import FiniteSpace, converges, discrete, lawson

ALL = list(Mode)


def test_parse_net():
    net = parse_net("0:1,1:0,2:1", IndexSet.chain(3))
    assert net.values == (1, 0, 1)
    with pytest.raises(ConvergenceError):
        parse_net("0:1,0:0", IndexSet.chain(2))
    with pytest.raises(ConvergenceError):
        parse_net("0:1", IndexSet.chain(2))
    with pytest.raises(ConvergenceError):
        parse_net("0=1", IndexSet.chain(1))


def test_inputs_validated(sier):
    idx = IndexSet.chain(1)
    with pytest.raises(ConvergenceError):
        converges_mode(sier, Net(idx, (0,)), make_I0(idx), "IS", 5)
    with pytest.raises(ConvergenceError):
        converges_mode(sier, Net(idx, (0,)), make_I0(IndexSet.chain(2)), "IS", 0)
    with pytest.raises(ValueError):
        converges_mode(sier, Net(idx, (0,)), make_I0(idx), "XX", 0)


def test_sierpinski_is_example(sier):
    idx = IndexSet.chain(2)
    assert converges_mode(sier, Net(idx, (0, 1)), make_I0(idx), Mode.IS, 0)


@pytest.mark.parametrize("mode", [Mode.I, Mode.LIMINF, Mode.IS, Mode.IGS])
def test_power_set_ideal_saturates(vee, mode):
    idx = IndexSet.chain(2)
    full = Ideal.power_set(idx)
    for values in [(0, 1), (2, 2), (1, 0)]:
        for x in range(vee.n):
            assert converges_mode(vee, Net(idx, values), full, mode, x)


@pytest.mark.parametrize("mode", [Mode.ISL, Mode.IGSL])
def test_power_set_ideal_with_lower_condition(vee, chain3, mode):
    # every y is then "eventually below" the net, so x must sit above all of them
    idx = IndexSet.chain(2)
    full = Ideal.power_set(idx)
    assert not any(converges_mode(vee, Net(idx, (0, 1)), full, mode, x) for x in range(3))
    assert [converges_mode(chain3, Net(idx, (0, 1)), full, mode, x) for x in range(3)] == [False, False, True]


def test_constant_nets_recover_order(vee):
    idx = IndexSet.chain(1)
    triv = Ideal.trivial(idx)
    for y in range(3):
        for x in range(3):
            assert converges_mode(vee, Net(idx, (y,)), triv, "IS", x) == vee.poset.le(x, y)


def test_directed_set_nets_match_topological_convergence():
    for p in enumerate_posets(3):
        s = FiniteSpace.alexandroff(p)
        for d, net, i0 in directed_set_cases(s):
            for x in range(s.n):
                assert converges_mode(s, net, i0, "IS", x) == converges(s, d, x)


def test_lawson_topology_option(sier):
    idx = IndexSet.chain(2)
    net, triv = Net(idx, (0, 1)), Ideal.trivial(idx)
    assert converges_mode(sier, net, triv, "I", 0, "tau")
    assert not converges_mode(sier, net, triv, "I", 0, "lawson")
    assert converges_mode(sier, net, triv, "I", 0, lawson(sier)) is False


def test_liminf_matches_is_on_posets():
    for n in (1, 2, 3):
        for p in enumerate_posets(n):
            s = FiniteSpace.alexandroff(p)
            for case in enumerate_cases(s, Bounds(max_index=2)):
                for x in range(n):
                    assert converges_mode(s, case.net, case.ideal, "LIMINF", x) == \
                        converges_mode(s, case.net, case.ideal, "IS", x)


def test_singleton_families_suffice(vee):
    for case in enumerate_cases(vee, Bounds(max_index=2)):
        for x in range(vee.n):
            assert igs_converges(vee, case.net, case.ideal, x) == \
                igs_converges_families(vee, case.net, case.ideal, x, max_family=3)


def test_induced_topology_examples(sier):
    t = induced_topology(sier, "IS", Bounds(max_index=2))
    assert set(t.exact) == set(sier.opens) and t.consistent
    d = discrete(2)
    assert len(induced_topology(d, "IGS", Bounds(max_index=2)).exact) == 4
    # the lower-topology open {0} is not ISL-open: net (0, 1) with ideal {{}}
    # ISL-converges to 0 yet leaves {0} at index 1
    isl = induced_topology(sier, "ISL", Bounds(max_index=2))
    assert set(lawson(sier)) - set(isl.enumerated) == {0b01}
    assert not isl.consistent


def test_induced_topology_rejects_modes(sier):
    with pytest.raises(ConvergenceError):
        induced_topology(sier, "I")


def test_bounds_validated():
    with pytest.raises(ConvergenceError):
        Bounds(max_index=0)


def test_case_enumeration_counts(sier):
    cases = enumerate_cases(sier, Bounds(max_index=2))
    chain_cases = [c for c in cases if c.kind == "chain"]
    per_index = {1: len(list(enumerate_ideals(IndexSet.chain(1)))), 2: len(list(enumerate_ideals(IndexSet.chain(2))))}
    assert len(chain_cases) == 2 * per_index[1] + 4 * per_index[2]
