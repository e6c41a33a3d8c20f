"""Proposition suites over enumerated (or sampled) finite spaces."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Iterator

from .classify import classify, property_flags
from .convergence import Bounds
from .maps import FiniteMap, find_retract, map_check
from .poset import FinitePoset, bits, enumerate_posets, is_smyth_directed, to_list
from .report import Report
from .rudin import is_transversal, rudin_transversal
from .sections import check_section
from .space import (
    FiniteSpace, closure, hat, interior, lower_approx, md_opens, set_way_below_d,
    tilde, upper_approx, upper_way_below, way_below_d,
)

SUITES = ("collapse", "section3", "section4", "section5", "section6", "rudin", "maps", "witness63", "all")

# default exhaustive caps per suite
DEFAULT_MAX_N = {
    "collapse": 5, "section3": 4, "section4": 5, "section5": 3, "section6": 3,
    "rudin": 4, "maps": 3, "witness63": 0,
}


class SuiteError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    max_n: int | None = None
    max_index: int = 3
    seed: int | None = None
    random_count: int | None = None  # None = exhaustive

    def __post_init__(self):
        if self.name not in SUITES:
            raise SuiteError(f"unknown suite {self.name!r}; choose from {', '.join(SUITES)}")
        if self.max_n is not None and not 1 <= self.max_n <= 6:
            raise SuiteError("max_n must be in 1..6")
        if self.max_index < 1:
            raise SuiteError("max_index must be positive")
        if self.random_count is not None:
            if self.random_count < 1:
                raise SuiteError("random count must be positive")
            if self.seed is None:
                raise SuiteError("random mode requires a seed")

    @property
    def sampled(self) -> bool:
        return self.random_count is not None

    def cap(self, suite: str) -> int:
        return self.max_n if self.max_n is not None else DEFAULT_MAX_N[suite]


# space sources -------------------------------------------------------------------

def random_poset(rng: random.Random, n: int) -> FinitePoset:
    """Random order: a random DAG along a random labelling, transitively closed."""
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return FinitePoset.from_pairs(n, pairs)


def spaces(spec: SuiteSpec, suite: str, min_n: int = 1) -> Iterator[FiniteSpace]:
    cap = spec.cap(suite)
    if spec.sampled:
        rng = random.Random(f"{spec.seed}:{suite}")
        for _ in range(spec.random_count):
            yield FiniteSpace.alexandroff(random_poset(rng, rng.randint(min_n, cap)))
        return
    for n in range(min_n, cap + 1):
        for poset in enumerate_posets(n):
            yield FiniteSpace.alexandroff(poset)


def _over(report: Report, items: Iterable, check: Callable[[object], Report], describe) -> int:
    count = 0
    for item in items:
        count += 1
        sub = check(item)
        for flag, ok in sub.flags.items():
            cex = None
            if not ok:
                cex = {"space": describe(item)}
                payload = sub.counterexample[flag]
                cex.update(payload if isinstance(payload, dict) else {"detail": payload})
            report.record(flag, ok, cex)
    return count


def _dsl(space: FiniteSpace) -> str:
    return space.to_dsl()


# collapse --------------------------------------------------------------------------

def collapse_checks(space: FiniteSpace, subsets: bool = True) -> Report:
    r = Report("collapse")
    poset = space.poset
    upper = set(poset.upper_sets)
    md = set(md_opens(space))
    r.record("D(X)=tau=upper", md == set(space.opens) == upper,
             {"md_opens": sorted(to_list(u) for u in md)})
    for x, y in product(range(space.n), repeat=2):
        if not r.record("way_below=order", way_below_d(space, x, y) == poset.le(x, y), {"x": x, "y": y}):
            break
    for d in space.directed:
        if not r.record("directed:greatest", poset.greatest(d) is not None, {"directed": to_list(d)}):
            break
    if subsets:
        for g, h in product(range(1, space.full + 1), repeat=2):
            expect = h & ~poset.up_set(g) == 0
            if not r.record("set_way_below=smyth", set_way_below_d(space, g, h) == expect,
                            {"G": to_list(g), "H": to_list(h)}):
                break
        for a in range(space.full + 1):
            down = poset.down_set(a)
            values = (tilde(space, a), hat(space, a), closure(space, a))
            if not r.record("tilde=hat=cl=down", all(v == down for v in values),
                            {"set": to_list(a), "tilde": to_list(values[0]), "hat": to_list(values[1]),
                             "closure": to_list(values[2])}):
                break
    cls = classify(space)
    r.record("classify:all-true", cls.passed, {"failures": cls.failures()})
    return r


# sections 3 and 4 -------------------------------------------------------------------

def _basis(space: FiniteSpace, basis: Iterable[int]) -> tuple[bool, object]:
    basis = list(basis)
    for b in basis:
        if not space.is_open(b):
            return False, {"not_open": to_list(b)}
    for u in space.opens:
        cover = 0
        for b in basis:
            if b & ~u == 0:
                cover |= b
        if cover != u:
            return False, {"open_not_covered": to_list(u)}
    return True, None


def section3_checks(space: FiniteSpace) -> Report:
    r = Report("section3")
    poset = space.poset
    flags, _ = property_flags(space)
    md = set(md_opens(space))
    for u in poset.upper_sets:
        if lower_approx(space, u) == u:
            if not r.record("Prop3.2", u in md, {"set": to_list(u)}):
                break
    else:
        r.record("Prop3.2", True)
    int_ok = all(interior(space, a) == lower_approx(space, a) for a in poset.upper_sets)
    cl_ok = all(closure(space, b) == upper_approx(space, b) for b in poset.lower_sets)
    r.record("Prop3.3", flags["c_space"] == int_ok == cl_ok,
             {"c_space": flags["c_space"], "interior_form": int_ok, "closure_form": cl_ok})
    for a in poset.upper_sets:
        if not r.record("Prop3.3(2)", interior(space, a) == lower_approx(space, a), {"set": to_list(a)}):
            break
    for b in poset.lower_sets:
        if not r.record("Prop3.3(3)", closure(space, b) == upper_approx(space, b), {"set": to_list(b)}):
            break
    wbd = space.way_below_down
    for a in range(space.full + 1):
        cl, down, t, h = closure(space, a), poset.down_set(a), tilde(space, a), hat(space, a)
        if flags["c_space"]:
            rhs = sum(1 << x for x in range(space.n) if wbd[x] & ~down == 0)
            r.record("Cor3.4", cl == rhs, {"set": to_list(a), "closure": to_list(cl), "criterion": to_list(rhs)})
        chain_ok = a & ~down == 0 and down & ~t == 0 and t & ~cl == 0
        r.record("Prop3.5(1)", chain_ok, {"set": to_list(a), "down": to_list(down), "tilde": to_list(t),
                                          "closure": to_list(cl)})
        ua = upper_approx(space, a)
        r.record("Prop3.5(2)", t & ~ua == 0, {"set": to_list(a), "tilde": to_list(t), "upper_approx": to_list(ua)})
        r.record("tilde<=hat<=cl", t & ~h == 0 and h & ~cl == 0,
                 {"set": to_list(a), "tilde": to_list(t), "hat": to_list(h), "closure": to_list(cl)})
    if flags["one_step_closure"]:
        for x in range(space.n):
            if not r.record("Prop3.9", space.interior_up[x] == space.way_below_up[x],
                            {"point": x, "interior_up": to_list(space.interior_up[x]),
                             "way_above": to_list(space.way_below_up[x])}):
                break
    ok, cex = _basis(space, space.way_below_up)
    r.record("Thm2.6(2)", ok, cex)
    nonempty = range(1, space.full + 1)
    for f in nonempty:
        got, want = upper_way_below(space, f), interior(space, poset.up_set(f))
        if not r.record("Thm2.9(2)", got == want, {"F": to_list(f), "double_up": to_list(got),
                                                   "interior_up": to_list(want)}):
            break
    ok, cex = _basis(space, (upper_way_below(space, f) for f in nonempty))
    r.record("Thm2.9(2):basis", ok, cex)
    _lattice(r, flags, ("Prop3.7", "Prop3.8"))
    return r


LATTICE = {
    "Prop3.7": (("c_space",), "one_step_closure"),
    "Prop3.8": (("one_step_closure",), "d_meet_continuous"),
    "Prop4.3": (("locally_hypercompact",), "weak_one_step_closure"),
    "Prop4.4": (("one_step_closure",), "weak_one_step_closure"),
    "Prop4.6": (("d_meet_continuous", "weak_one_step_closure"), "one_step_closure"),
    "Thm4.7(=>)": (("d_meet_continuous", "weak_one_step_closure"), "one_step_closure"),
    "Thm6.15(=>)": (("c_space",), "d_quasicontinuous"),
    "Thm6.15(<=)": (("d_quasicontinuous", "d_meet_continuous"), "c_space"),
}


def _lattice(r: Report, flags: dict, names: Iterable[str]) -> None:
    for name in names:
        hyps, concl = LATTICE[name]
        ok = not all(flags[h] for h in hyps) or flags[concl]
        r.record(name, ok, {h: flags[h] for h in hyps + (concl,)})


def section4_checks(space: FiniteSpace) -> Report:
    r = Report("section4")
    flags, _ = property_flags(space)
    _lattice(r, flags, ("Prop4.3", "Prop4.4", "Prop4.6", "Thm4.7(=>)", "Thm6.15(=>)", "Thm6.15(<=)",
                        "Prop3.7", "Prop3.8"))
    one = flags["one_step_closure"]
    r.record("Thm4.7(<=)", not one or (flags["d_meet_continuous"] and flags["weak_one_step_closure"]),
             {k: flags[k] for k in ("one_step_closure", "d_meet_continuous", "weak_one_step_closure")})
    r.record("Thm6.15:d_meet", not flags["c_space"] or flags["d_meet_continuous"],
             {k: flags[k] for k in ("c_space", "d_meet_continuous")})
    return r


def prop45_checks(space: FiniteSpace) -> Report:
    """Tilde-images lower for all sets iff for all directed sets."""
    r = Report("prop45")
    poset = space.poset
    all_sets = all(poset.is_lower(tilde(space, a)) for a in range(space.full + 1))
    directed = all(poset.is_lower(tilde(space, d)) for d in space.directed)
    r.record("Prop4.5", all_sets == directed, {"all_sets": all_sets, "directed_sets": directed})
    return r


def retract_pairs(spec: SuiteSpec, max_x: int = 4, max_y: int = 3) -> Iterator[tuple[FiniteSpace, FiniteSpace]]:
    xs = [FiniteSpace.alexandroff(p) for n in range(1, max_x + 1) for p in enumerate_posets(n)]
    ys = [FiniteSpace.alexandroff(p) for n in range(1, max_y + 1) for p in enumerate_posets(n)]
    if spec.sampled:
        rng = random.Random(f"{spec.seed}:retract")
        for _ in range(spec.random_count):
            yield rng.choice(xs), rng.choice(ys)
        return
    yield from product(xs, ys)


def retract_check(pair) -> Report:
    x, y = pair
    r = Report("retract")
    found = find_retract(x, y)
    if found is not None:
        fx, _ = property_flags(x)
        fy, _ = property_flags(y)
        rmap, smap = found
        r.record("Prop3.10", not fx["one_step_closure"] or fy["one_step_closure"],
                 {"Y": y.to_dsl(), "r": list(rmap.table), "s": list(smap.table)})
    return r


# rudin and maps ---------------------------------------------------------------------

def rudin_checks(poset: FinitePoset, max_family: int = 4) -> Report:
    r = Report("rudin")
    members = list(range(1, (1 << poset.n)))
    count = 0
    for size in range(1, max_family + 1):
        for fam in combinations(members, size):
            if not is_smyth_directed(poset, fam):
                continue
            count += 1
            d = rudin_transversal(poset, fam)
            if not r.record("Lemma4.2", is_transversal(poset, fam, d),
                            {"family": [to_list(f) for f in fam], "transversal": to_list(d)}):
                return r
    r.record("Lemma4.2", True)
    r.stats["families"] = count
    return r


def map_checks(pair) -> Report:
    x, y = pair
    r = Report("maps")
    for table in product(range(y.n), repeat=x.n):
        sub = map_check(FiniteMap(x, y, table))
        ok = sub.flags.get("agree:Prop2.18", True)
        if not r.record("Prop2.18", ok, {"Y": y.to_dsl(), "table": list(table), **sub.counterexample}):
            break
    return r


# runner -----------------------------------------------------------------------------

def _suite_report(spec: SuiteSpec, suite: str) -> Report:
    report = Report(suite)
    report.stats["mode"] = "sampled" if spec.sampled else "exhaustive"
    if suite == "collapse":
        cap = spec.cap(suite)
        report.stats["spaces"] = _over(report, spaces(spec, suite),
                                       lambda s: collapse_checks(s, subsets=s.n <= min(cap, 4)), _dsl)
    elif suite == "section3":
        report.stats["spaces"] = _over(report, spaces(spec, suite), section3_checks, _dsl)
        _over(report, spaces(spec, suite), prop45_checks, _dsl)
        report.stats["retract_pairs"] = _over(report, retract_pairs(spec), retract_check,
                                              lambda p: p[0].to_dsl())
    elif suite == "section4":
        report.stats["spaces"] = _over(report, spaces(spec, suite), section4_checks, _dsl)
    elif suite in ("section5", "section6"):
        bounds = Bounds(max_index=spec.max_index)
        sec = int(suite[-1])
        report.stats["spaces"] = _over(report, spaces(spec, suite),
                                       lambda s: check_section(s, sec, bounds), _dsl)
        report.stats["max_index"] = spec.max_index
    elif suite == "rudin":
        posets = (s.poset for s in spaces(spec, suite))
        report.stats["posets"] = _over(report, posets, rudin_checks, lambda p: p.to_dsl())
    elif suite == "maps":
        pool = list(spaces(spec, suite))
        report.stats["pairs"] = _over(report, product(pool, pool), map_checks, lambda p: p[0].to_dsl())
    elif suite == "witness63":
        from .witness import example63_facts, omega_chain_facts
        report.merge(example63_facts(), "Example63:")
        report.merge(omega_chain_facts(), "OmegaChain:")
    return report


def run_suite(spec: SuiteSpec) -> tuple[Report, int]:
    """Run a suite; the exit code is 0 when every flag holds and 1 otherwise."""
    if spec.name == "all":
        report = Report("all")
        report.stats["mode"] = "sampled" if spec.sampled else "exhaustive"
        for suite in SUITES[:-1]:
            sub = _suite_report(spec, suite)
            report.merge(sub, f"{suite}:")
    else:
        report = _suite_report(spec, spec.name)
    if spec.seed is not None:
        report.stats["seed"] = spec.seed
    return report, 0 if report.passed else 1
