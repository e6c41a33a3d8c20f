import pytest

from mdspace.classify import PROPERTY_CHECKS, classify
from mdspace.poset import FinitePoset, enumerate_posets
from mdspace.space import FiniteSpace, discrete


def test_sierpinski_all_true(sier):
    r = classify(sier)
    assert r.passed and set(PROPERTY_CHECKS) <= set(r.flags)


def test_discrete_all_true():
    assert classify(discrete(4)).passed


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_small_space_is_a_c_space(n):
    for p in enumerate_posets(n):
        assert classify(FiniteSpace.alexandroff(p)).flags["c_space"]


def test_equivalence_flags_present(vee):
    r = classify(vee)
    assert {"agree:Thm2.5", "agree:Thm2.11", "agree:Lemma2.14", "agree:Thm6.15"} <= set(r.flags)
    assert r.stats["points"] == 3


def test_json_schema_is_stable(vee):
    import json

    out = json.loads(classify(vee).to_json())
    assert {"flags", "counterexample", "sets", "status"} <= set(out)
    assert out["status"] == "pass"
