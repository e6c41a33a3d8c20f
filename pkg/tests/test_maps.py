from mdspace.maps import FiniteMap, find_retract, map_check
from mdspace.space import chain


def test_identity(sier):
    r = map_check(FiniteMap(sier, sier, (0, 1)))
    assert r.flags["monotone"] and r.flags["continuous"] and r.flags["md_continuous"]


def test_swap_not_monotone(sier):
    r = map_check(FiniteMap(sier, sier, (1, 0)))
    assert not r.flags["monotone"]
    assert r.counterexample["monotone"] == {"x": 0, "y": 1}


def test_retract_example(sier):
    r, s = find_retract(chain(3), sier)
    assert s.table == (0, 2)
    assert r.table == (0, 0, 1)


def test_no_retract_onto_bigger_space(sier):
    assert find_retract(sier, chain(3)) is None
