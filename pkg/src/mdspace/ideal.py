"""Directed index sets and ideals of subsets of them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .poset import FinitePoset, PosetError, bits, submasks, to_list, to_mask
from .report import Report


class IdealError(ValueError):
    pass


class IndexSet:
    """A nonempty directed finite poset used as the domain of a net."""

    def __init__(self, poset: FinitePoset):
        if poset.n == 0:
            raise IdealError("index set must be nonempty")
        if not poset.is_directed(poset.full):
            raise IdealError("index set is not directed")
        self.poset = poset
        self.size = poset.n
        self.full = poset.full

    @classmethod
    def chain(cls, m: int) -> "IndexSet":
        return cls(FinitePoset.chain(m))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IndexSet) and self.poset == other.poset

    def __hash__(self) -> int:
        return hash(self.poset)

    def __repr__(self) -> str:
        return f"IndexSet({self.poset!r})"

    def tail(self, d: int) -> int:
        """Indices at or above ``d``."""
        return self.poset.up[d]

    def describe(self) -> str:
        if self.poset == FinitePoset.chain(self.size):
            return f"chain:{self.size}"
        return self.poset.to_dsl()


def parse_index(text: str) -> IndexSet:
    """``chain:m`` or the text of a ``poset`` description."""
    text = text.strip()
    m = re.fullmatch(r"chain:(\d+)", text)
    if m:
        return IndexSet.chain(int(m.group(1)))
    from .space import load_space  # local import: space imports nothing from here
    try:
        return IndexSet(load_space(text).poset)
    except (PosetError, ValueError) as exc:
        raise IdealError(f"bad index set: {exc}") from exc


@dataclass(frozen=True)
class Ideal:
    """A family of subsets of an index set, closed downward and under unions."""

    index: IndexSet
    family: frozenset[int]

    def __post_init__(self):
        problems = ideal_problems(self.index, self.family)
        if problems:
            raise IdealError(problems[0])

    def __contains__(self, mask: int) -> bool:
        return mask in self.family

    @property
    def proper(self) -> bool:
        return self.index.full not in self.family

    @property
    def admissible(self) -> bool:
        return all(self.index.full & ~self.index.tail(d) in self.family for d in range(self.index.size))

    @property
    def top(self) -> int:
        """Union of all members; the ideal is the power set of it."""
        out = 0
        for a in self.family:
            out |= a
        return out

    @classmethod
    def generated(cls, index: IndexSet, generators: Iterable[int]) -> "Ideal":
        """Smallest ideal containing ``generators`` (and the empty set)."""
        top = 0
        for g in generators:
            if g & ~index.full:
                raise IdealError("generator mentions an index outside the index set")
            top |= g
        return cls(index, frozenset(submasks(top)))

    @classmethod
    def trivial(cls, index: IndexSet) -> "Ideal":
        return cls(index, frozenset({0}))

    @classmethod
    def power_set(cls, index: IndexSet) -> "Ideal":
        return cls(index, frozenset(range(index.full + 1)))

    def describe(self) -> str:
        return "gen:[" + ",".join(str(i) for i in bits(self.top)) + "]"


def ideal_problems(index: IndexSet, family: Iterable[int]) -> list[str]:
    fam = set(family)
    out = []
    if any(a & ~index.full for a in fam):
        out.append("member mentions an index outside the index set")
        return out
    if 0 not in fam:
        out.append("empty set is not a member")
    for a in sorted(fam):
        for b in submasks(a):
            if b not in fam:
                out.append(f"not downward closed: {to_list(b)} below {to_list(a)}")
                break
    for a, b in combinations(sorted(fam), 2):
        if a | b not in fam:
            out.append(f"not closed under union: {to_list(a)} and {to_list(b)}")
            break
    return out


def make_I0(index: IndexSet) -> Ideal:
    """Sets contained in the complement of some tail of the index set."""
    fam = set()
    for d in range(index.size):
        fam.update(submasks(index.full & ~index.tail(d)))
    return Ideal(index, frozenset(fam))


def validate_ideal(index: IndexSet, family: Iterable[int]) -> Report:
    fam = frozenset(family)
    report = Report("validate_ideal")
    problems = ideal_problems(index, fam)
    report.record("ideal_axioms", not problems, {"problem": problems[0]} if problems else None)
    report.sets["proper"] = index.full not in fam
    report.sets["admissible"] = all(index.full & ~index.tail(d) in fam for d in range(index.size))
    report.sets["members"] = [to_list(a) for a in sorted(fam)]
    ok, cex = check_eventually(index)
    report.record("Lemma2.15", ok, cex)
    return report


def check_eventually(index: IndexSet) -> tuple[bool, object]:
    """A defect set lying in I0 is avoided from some index onward.

    Any defect set {j : x_j not in up A} is realised by an indicator net into
    a two point space, so quantifying over all subsets of the index set
    covers every net and every ``A``.
    """
    i0 = make_I0(index)
    for s in range(index.full + 1):
        if s in i0 and not any(index.tail(d) & s == 0 for d in range(index.size)):
            return False, {"defect": to_list(s)}
    return True, None


def enumerate_ideals(index: IndexSet) -> Iterator[Ideal]:
    """Every ideal of ``index``, ordered by the mask of its union.

    Downward closure plus closure under binary union makes a finite ideal
    the power set of the union of its members, so ideals correspond to
    subsets of the index set.
    """
    for top in range(index.full + 1):
        yield Ideal(index, frozenset(submasks(top)))


def brute_force_ideals(index: IndexSet) -> list[frozenset[int]]:
    """Ideals found by testing every family of subsets (small index sets only)."""
    universe = list(range(index.full + 1))
    if len(universe) > 16:
        raise IdealError("brute force limited to index sets of at most 4 points")
    out = []
    for choice in range(1 << len(universe)):
        fam = frozenset(a for a in universe if choice >> a & 1)
        if not ideal_problems(index, fam):
            out.append(fam)
    return out


def parse_ideal(text: str, index: IndexSet) -> Ideal:
    """``i0``, ``trivial``, ``powerset`` or ``gen:[0,1];[2]``."""
    text = text.strip()
    if text == "i0":
        return make_I0(index)
    if text == "trivial":
        return Ideal.trivial(index)
    if text == "powerset":
        return Ideal.power_set(index)
    if text.startswith("gen:"):
        gens = []
        for chunk in text[4:].split(";"):
            inner = chunk.strip().strip("[]")
            pts = [int(t) for t in inner.split(",") if t.strip()]
            if any(not 0 <= p < index.size for p in pts):
                raise IdealError(f"generator {chunk} outside the index set")
            gens.append(to_mask(pts))
        return Ideal.generated(index, gens)
    raise IdealError(f"unknown ideal {text!r}")
