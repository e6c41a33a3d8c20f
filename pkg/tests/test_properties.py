from hypothesis import given, settings
from hypothesis import strategies as st

from mdspace.classify import classify
from mdspace.convergence import Mode, Net, converges_mode
from mdspace.ideal import IndexSet, enumerate_ideals
from mdspace.poset import FinitePoset, is_smyth_directed
from mdspace.rudin import is_transversal, rudin_transversal
from mdspace.space import (
    FiniteSpace, closure, hat, interior, md_opens, set_way_below_d, tilde, way_below_d,
)


@st.composite
def posets(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    perm = draw(st.permutations(range(n)))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))
    # edges go up along a random linear extension, so no cycles
    return FinitePoset.from_pairs(n, [(perm[i], perm[j]) for i, j in edges])


@st.composite
def space_and_set(draw):
    s = FiniteSpace.alexandroff(draw(posets()))
    return s, draw(st.integers(0, s.full))


settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@given(posets())
def test_opens_are_the_upper_sets(p):
    s = FiniteSpace.alexandroff(p)
    assert set(md_opens(s)) == set(s.opens) == set(p.upper_sets)


@given(posets())
def test_way_below_is_the_order(p):
    s = FiniteSpace.alexandroff(p)
    assert all(way_below_d(s, x, y) == p.le(x, y) for x in range(p.n) for y in range(p.n))


@given(space_and_set(), st.integers(1, 31))
def test_set_way_below_is_smyth(sa, g):
    s, h = sa
    g &= s.full
    if g and h:
        assert set_way_below_d(s, g, h) == (h & ~s.poset.up_set(g) == 0)


@given(space_and_set())
def test_approximations_sandwich(sa):
    s, a = sa
    assert a & ~s.poset.down_set(a) == 0
    assert s.poset.down_set(a) & ~tilde(s, a) == 0
    assert tilde(s, a) & ~hat(s, a) == 0
    assert hat(s, a) & ~closure(s, a) == 0
    assert interior(s, a) & ~a == 0


@given(posets(4))
def test_classify_all_true(p):
    assert classify(FiniteSpace.alexandroff(p)).passed


@given(posets(4), st.lists(st.integers(1, 15), min_size=1, max_size=4))
def test_rudin_output_valid(p, raw):
    fam = [m & p.full for m in raw if m & p.full]
    if fam and is_smyth_directed(p, fam):
        assert is_transversal(p, fam, rudin_transversal(p, fam))


@given(posets(3), st.integers(1, 3), st.data())
def test_mode_implications(p, m, data):
    s = FiniteSpace.alexandroff(p)
    idx = IndexSet.chain(m)
    net = Net(idx, tuple(data.draw(st.lists(st.integers(0, p.n - 1), min_size=m, max_size=m))))
    ideal = data.draw(st.sampled_from(list(enumerate_ideals(idx))))
    x = data.draw(st.integers(0, p.n - 1))
    got = {mode: converges_mode(s, net, ideal, mode, x) for mode in Mode}
    assert not got[Mode.IS] or got[Mode.IGS]
    assert not got[Mode.ISL] or got[Mode.IS]
    assert not got[Mode.IGSL] or got[Mode.IGS]
    assert got[Mode.IS] == got[Mode.I] == got[Mode.LIMINF]
