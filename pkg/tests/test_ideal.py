import pytest

from mdspace.ideal import (
    Ideal, IdealError, IndexSet, brute_force_ideals, check_eventually, enumerate_ideals, make_I0,
    parse_ideal, parse_index, validate_ideal,
)
from mdspace.poset import FinitePoset, to_list


def members(ideal):
    return sorted(to_list(a) for a in ideal.family)


def test_i0_on_chain3():
    i0 = make_I0(IndexSet.chain(3))
    assert members(i0) == [[], [0], [0, 1], [1]]
    assert i0.proper and i0.admissible


def test_i0_on_singleton():
    assert members(make_I0(IndexSet.chain(1))) == [[]]


def test_power_set_not_proper():
    r = validate_ideal(IndexSet.chain(2), range(4))
    assert r.flags["ideal_axioms"] and r.sets["proper"] is False


def test_non_ideal_reported():
    r = validate_ideal(IndexSet.chain(2), [0, 1, 2])
    assert not r.flags["ideal_axioms"]
    with pytest.raises(IdealError):
        Ideal(IndexSet.chain(2), frozenset({1}))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_enumeration_matches_brute_force(m):
    idx = IndexSet.chain(m)
    assert sorted(sorted(i.family) for i in enumerate_ideals(idx)) == \
        sorted(sorted(f) for f in brute_force_ideals(idx))


def test_enumeration_on_a_directed_index():
    idx = IndexSet(FinitePoset.from_pairs(3, [(0, 2), (1, 2)]))
    assert len(list(enumerate_ideals(idx))) == len(brute_force_ideals(idx))


def test_only_admissible_proper_ideal_is_i0():
    for m in range(1, 5):
        idx = IndexSet.chain(m)
        good = [i for i in enumerate_ideals(idx) if i.proper and i.admissible]
        assert good == [make_I0(idx)]


def test_eventually():
    assert check_eventually(IndexSet.chain(4)) == (True, None)


def test_parse():
    idx = IndexSet.chain(3)
    assert parse_ideal("i0", idx) == make_I0(idx)
    assert members(parse_ideal("trivial", idx)) == [[]]
    assert not parse_ideal("powerset", idx).proper
    assert members(parse_ideal("gen:[0];[1]", idx)) == [[], [0], [0, 1], [1]]
    with pytest.raises(IdealError):
        parse_ideal("gen:[7]", idx)
    with pytest.raises(IdealError):
        parse_ideal("nope", idx)


def test_index_parsing():
    assert parse_index("chain:3").size == 3
    with pytest.raises(IdealError):
        parse_index("poset 2\n")  # an antichain is not directed
