import pytest

from mdspace.space import FiniteSpace, chain, discrete, sierpinski
from mdspace.poset import FinitePoset

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def sier() -> FiniteSpace:
    return sierpinski()


@pytest.fixture
def vee() -> FiniteSpace:
    """Point 2 below both 0 and 1."""
    return FiniteSpace.alexandroff(FinitePoset.from_pairs(3, [(2, 0), (2, 1)]))


@pytest.fixture
def chain3() -> FiniteSpace:
    return chain(3)


@pytest.fixture
def disc2() -> FiniteSpace:
    return discrete(2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
