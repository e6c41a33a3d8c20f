import pytest

from mdspace.poset import FinitePoset, enumerate_posets, to_list, to_mask
from mdspace.space import (
    DSLError, FiniteSpace, SpaceError, chain, closure, closure_suite, converges, discrete, hat,
    interior, is_monotone_determined, lawson, load_space, md_opens, neighborhoods, omega, parse_set,
    set_way_below_d, specialization, tilde, way_below_d,
)


def sets(masks):
    return sorted(to_list(m) for m in masks)


def test_poset_dsl_gives_sierpinski(sier):
    s = load_space("poset 2\nle 0 1\n")
    assert sets(s.opens) == [[], [0, 1], [1]]
    assert s == sier


def test_space_dsl_gives_same_space(sier):
    s = load_space("space 2\nopen\nopen 1\nopen 0 1\n")
    assert s == sier and s.poset.le(0, 1)


def test_indiscrete_is_not_t0():
    with pytest.raises(SpaceError, match="T0|T₀|t0"):
        load_space("space 2\nopen\nopen 0 1\n")


def test_non_topology_rejected():
    with pytest.raises(SpaceError):
        load_space("space 2\nopen\nopen 0\nopen 1\n")


def test_constructor_rejects_order_mismatch():
    with pytest.raises(SpaceError, match="specialization"):
        FiniteSpace(FinitePoset.discrete(2), [0, 0b10, 0b11])


@pytest.mark.parametrize("text", ["", "poset x", "poset 2\nle 0 5\n", "space 2\nle 0 1\n", "graph 2"])
def test_dsl_errors(text):
    with pytest.raises((DSLError, SpaceError)):
        load_space(text)


def test_comments_ignored():
    assert load_space("# sierpinski\nposet 2  # two points\nle 0 1\n").n == 2


def test_specialization():
    assert specialization(discrete(3)) == FinitePoset.discrete(3)
    s = load_space("space 3\nopen\nopen 2\nopen 1 2\nopen 0 1 2\n")
    assert specialization(s) == FinitePoset.chain(3)


def test_convergence_examples(sier, chain3):
    assert converges(sier, to_mask([1]), 0)
    assert converges(chain3, to_mask([1]), 1)
    assert not converges(chain3, to_mask([0, 1]), 2)


def test_md_opens_examples(sier):
    assert sets(md_opens(sier)) == [[], [0, 1], [1]]
    assert is_monotone_determined(sier)
    assert len(md_opens(discrete(3))) == 8


def test_way_below(sier, chain3):
    assert way_below_d(sier, 0, 1)
    assert not way_below_d(sier, 1, 0)
    assert set_way_below_d(chain3, to_mask([0]), to_mask([1, 2]))


def test_neighborhoods(sier):
    nb = neighborhoods(sier, 1)
    assert to_list(nb.way_below) == [0, 1]
    assert to_list(nb.way_above) == [1]
    assert to_list(nb.interior_up) == [1]
    d = neighborhoods(discrete(2), 0)
    assert to_list(d.way_below) == [0] and d.compact


def test_fin_chain_top_is_every_nonempty_set(chain3):
    assert len(neighborhoods(chain3, 2).fin) == 7


def test_closure_suite_sierpinski(sier):
    cs = closure_suite(sier, to_mask([1]))
    assert to_list(cs.closure) == to_list(cs.tilde) == to_list(cs.hat) == to_list(cs.down) == [0, 1]


def test_closure_suite_empty(chain3):
    cs = closure_suite(chain3, 0)
    assert all(v == [] for v in cs.as_dict().values())


def test_lower_set_closure(sier):
    assert to_list(closure(sier, to_mask([0]))) == [0]


def test_lawson_and_omega(sier, chain3):
    assert sets(omega(sier)) == [[], [0], [0, 1]]
    assert len(lawson(sier)) == 4
    assert len(lawson(chain3)) == 8
    d = discrete(2)
    assert set(lawson(d)) == set(omega(d)) == set(d.opens)


def test_parse_set():
    assert parse_set("0,2") == 0b101
    assert parse_set("") == 0
    with pytest.raises(ValueError):
        parse_set("0,5", 3)


def test_collapse_closed_forms_on_n3():
    # the deciders are definitional; the closed forms only appear here
    for p in enumerate_posets(3):
        s = FiniteSpace.alexandroff(p)
        for a in range(s.full + 1):
            down = p.down_set(a)
            assert closure(s, a) == tilde(s, a) == hat(s, a) == down
            assert interior(s, a) == max((u for u in p.upper_sets if u & ~a == 0), key=lambda u: bin(u).count("1"))


def test_too_many_points():
    with pytest.raises(SpaceError):
        FiniteSpace.alexandroff(FinitePoset.chain(17))
