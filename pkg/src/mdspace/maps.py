"""Maps between finite spaces: continuity notions and retract search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .poset import bits, to_list
from .report import Report
from .space import FiniteSpace, is_monotone_determined

RETRACT_SEARCH_CAP = 10 ** 7


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteMap:
    domain: FiniteSpace
    codomain: FiniteSpace
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.domain.n:
            raise MapError(f"table has {len(self.table)} entries, domain has {self.domain.n} points")
        if any(not 0 <= v < self.codomain.n for v in self.table):
            raise MapError("table value outside the codomain")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= 1 << self.table[x]
        return out

    def preimage(self, mask: int) -> int:
        out = 0
        for x, v in enumerate(self.table):
            if mask >> v & 1:
                out |= 1 << x
        return out


def is_monotone(f: FiniteMap) -> bool:
    dom, cod = f.domain.poset, f.codomain.poset
    return all(
        cod.le(f(x), f(y))
        for x in range(dom.n) for y in range(dom.n) if dom.le(x, y)
    )


def is_continuous(f: FiniteMap) -> bool:
    return all(f.domain.is_open(f.preimage(u)) for u in f.codomain.opens)


def is_md_continuous(f: FiniteMap) -> bool:
    """Monotone and every convergent directed pair maps to a convergent directed pair."""
    if not is_monotone(f):
        return False
    cod = f.codomain
    for d, lim in f.domain.limits.items():
        fd = f.image(d)
        for x in bits(lim):
            if not cod.poset.is_directed(fd) or not cod.limits[fd] >> f(x) & 1:
                return False
    return True


def map_check(f: FiniteMap) -> Report:
    report = Report("map_check")
    mono, cont, mdc = is_monotone(f), is_continuous(f), is_md_continuous(f)
    report.record("monotone", mono, _monotone_witness(f))
    report.record("continuous", cont, _continuity_witness(f))
    report.record("md_continuous", mdc, {"monotone": mono} if not mono else _md_witness(f))
    if is_monotone_determined(f.domain) and is_monotone_determined(f.codomain):
        report.record("agree:Prop2.18", cont == mdc, {"continuous": cont, "md_continuous": mdc})
    report.sets["table"] = list(f.table)
    return report


def _monotone_witness(f: FiniteMap):
    dom, cod = f.domain.poset, f.codomain.poset
    for x in range(dom.n):
        for y in range(dom.n):
            if dom.le(x, y) and not cod.le(f(x), f(y)):
                return {"x": x, "y": y}
    return None


def _continuity_witness(f: FiniteMap):
    for u in f.codomain.opens:
        if not f.domain.is_open(f.preimage(u)):
            return {"open": to_list(u), "preimage": to_list(f.preimage(u))}
    return None


def _md_witness(f: FiniteMap):
    cod = f.codomain
    for d, lim in f.domain.limits.items():
        fd = f.image(d)
        for x in bits(lim):
            if not cod.poset.is_directed(fd) or not cod.limits[fd] >> f(x) & 1:
                return {"directed": to_list(d), "point": x}
    return None


def continuous_maps(x: FiniteSpace, y: FiniteSpace) -> list[tuple[int, ...]]:
    """Tables of all continuous maps ``x -> y`` in lexicographic order."""
    out = []
    for table in product(range(y.n), repeat=x.n):
        if is_continuous(FiniteMap(x, y, table)):
            out.append(table)
    return out


def find_retract(x: FiniteSpace, y: FiniteSpace) -> tuple[FiniteMap, FiniteMap] | None:
    """Continuous ``r: x -> y`` and ``s: y -> x`` with ``r`` after ``s`` the identity.

    Pairs are compared by ``(r.table, s.table)``; the least one is returned.
    """
    if x.n ** y.n * y.n ** x.n > RETRACT_SEARCH_CAP:
        raise MapError("retract search space exceeds the cap")
    for r_table in continuous_maps(x, y):
        fibres = [[p for p in range(x.n) if r_table[p] == q] for q in range(y.n)]
        if any(not fib for fib in fibres):
            continue
        for s_table in product(*fibres):
            s = FiniteMap(y, x, s_table)
            if is_continuous(s):
                return FiniteMap(x, y, r_table), s
    return None
