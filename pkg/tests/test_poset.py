import pytest

from mdspace.poset import (
    FinitePoset, PosetError, brute_force_poset_count, enumerate_posets, is_smyth_directed, smyth_le,
    to_mask,
)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 19), (4, 219), (5, 4231)])
def test_labelled_counts(n, count):
    assert sum(1 for _ in enumerate_posets(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_brute_force(n):
    assert brute_force_poset_count(n) == sum(1 for _ in enumerate_posets(n))


def test_enumeration_has_no_duplicates():
    seen = {p.leq for p in enumerate_posets(4)}
    assert len(seen) == 219


def test_enumeration_out_of_range():
    with pytest.raises(PosetError):
        next(enumerate_posets(0))
    with pytest.raises(PosetError):
        next(enumerate_posets(7))


def test_closure_of_pairs():
    p = FinitePoset.from_pairs(3, [(0, 1), (1, 2)])
    assert p.le(0, 2) and not p.le(2, 0)
    assert p == FinitePoset.chain(3)


def test_cycle_rejected():
    with pytest.raises(PosetError, match="cycle"):
        FinitePoset.from_pairs(2, [(0, 1), (1, 0)])


def test_constructor_checks_axioms():
    with pytest.raises(PosetError, match="reflexive"):
        FinitePoset([[False]])
    with pytest.raises(PosetError, match="transitivity"):
        FinitePoset([[1, 1, 0], [0, 1, 1], [0, 0, 1]])


def test_directed_subsets_have_greatest_elements():
    for p in enumerate_posets(4):
        for d in range(1, p.full + 1):
            assert p.is_directed(d) == (p.greatest(d) is not None)


def test_smyth_order():
    p = FinitePoset.chain(3)
    assert smyth_le(p, to_mask([0]), to_mask([1, 2]))
    assert not smyth_le(p, to_mask([2]), to_mask([0]))
    anti = FinitePoset.discrete(2)
    assert not is_smyth_directed(anti, [to_mask([0]), to_mask([1])])
    assert is_smyth_directed(anti, [to_mask([0, 1]), to_mask([0])])


def test_dsl_round_trip():
    from mdspace.space import load_space

    for p in enumerate_posets(3):
        assert load_space(p.to_dsl()).poset == p
