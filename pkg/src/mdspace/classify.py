"""Property flags of a finite space, each equivalent pair computed twice."""

from __future__ import annotations

from .poset import bits, to_list
from .report import Report
from .space import FiniteSpace, hat, interior, md_opens, set_way_below_d, tilde


def _closure_fast(space: FiniteSpace, a: int) -> int:
    # complement of the largest open set disjoint from a
    missed = 0
    for u in space.opens:
        if not u & a:
            missed |= u
    return space.full & ~missed


def check_t0(space: FiniteSpace) -> tuple[bool, object]:
    seen = {}
    for p in range(space.n):
        key = tuple(u >> p & 1 for u in space.opens)
        if key in seen:
            return False, {"points": [seen[key], p]}
        seen[key] = p
    return True, None


def check_monotone_determined(space: FiniteSpace) -> tuple[bool, object]:
    md = set(md_opens(space))
    diff = sorted(md.symmetric_difference(space.opens))
    if diff:
        return False, {"set": to_list(diff[0]), "open": diff[0] in space.opens}
    return True, None


def check_d_continuous(space: FiniteSpace) -> tuple[bool, object]:
    """Each point's d-way-below set is directed and converges to it."""
    for x in range(space.n):
        wb = space.way_below_down[x]
        if not space.poset.is_directed(wb):
            return False, {"point": x, "way_below": to_list(wb), "reason": "not directed"}
        if not space.limits[wb] >> x & 1:
            return False, {"point": x, "way_below": to_list(wb), "reason": "does not converge"}
    return True, None


def check_directed_approximants(space: FiniteSpace) -> tuple[bool, object]:
    """Each point is the limit of some directed set of points d-way-below it."""
    for x in range(space.n):
        wb = space.way_below_down[x]
        if not any(d & ~wb == 0 and lim >> x & 1 for d, lim in space.limits.items()):
            return False, {"point": x, "way_below": to_list(wb)}
    return True, None


def check_c_space(space: FiniteSpace) -> tuple[bool, object]:
    """For ``y`` in open ``U`` some ``x`` has ``y`` in int(up x) and up x inside ``U``."""
    up = space.poset.up
    for u in space.opens:
        covered = 0
        for x in range(space.n):
            if up[x] & ~u == 0:
                covered |= space.interior_up[x]
        if u & ~covered:
            y = next(bits(u & ~covered))
            return False, {"point": y, "open": to_list(u)}
    return True, None


def _interior_up_sets(space: FiniteSpace) -> dict[int, tuple[int, int]]:
    table = {}
    for f in range(1, space.full + 1):
        upf = space.poset.up_set(f)
        table[f] = (upf, interior(space, upf))
    return table


def check_locally_hypercompact(space: FiniteSpace) -> tuple[bool, object]:
    """Like the c-space condition with finite sets ``F`` in place of points."""
    table = _interior_up_sets(space)
    for u in space.opens:
        covered = 0
        for upf, inner in table.values():
            if upf & ~u == 0:
                covered |= inner
        if u & ~covered:
            y = next(bits(u & ~covered))
            return False, {"point": y, "open": to_list(u)}
    return True, None


def _has_member_below(space: FiniteSpace, family: set[int]) -> list[bool]:
    """``out[m]`` is True iff some member of ``family`` is a subset of ``m``."""
    out = [False] * (space.full + 1)
    for m in range(space.full + 1):
        if m in family:
            out[m] = True
            continue
        for i in bits(m):
            if out[m & ~(1 << i)]:
                out[m] = True
                break
    return out


def check_d_quasicontinuous(space: FiniteSpace) -> tuple[bool, object]:
    """fin_d(x) is a (Smyth) directed family converging to ``x``."""
    for x in range(space.n):
        fam = [f for f in range(1, space.full + 1) if set_way_below_d(space, f, 1 << x)]
        if not fam:
            return False, {"point": x, "reason": "fin_d is empty"}
        below = _has_member_below(space, set(fam))
        ups = {f: space.poset.up_set(f) for f in fam}
        for f1 in fam:
            for f2 in fam:
                if not below[ups[f1] & ups[f2]]:
                    return False, {"point": x, "reason": "not directed", "members": [to_list(f1), to_list(f2)]}
        for u in space.opens:
            if u >> x & 1 and not below[u]:
                return False, {"point": x, "reason": "does not converge", "open": to_list(u)}
    return True, None


def check_finite_approximants(space: FiniteSpace) -> tuple[bool, object]:
    """Each point is the limit of a directed family inside fin_d(x).

    A finite Smyth-directed family has a member below all the others (pick
    a bound for each pair and iterate), and that member alone is a directed
    family converging wherever the whole family does, because open sets are
    upper sets.  So it suffices to look at singleton families {F}, which
    converge to ``x`` iff ``F`` lies in every open neighbourhood of ``x``.
    """
    for x in range(space.n):
        nbhd = space.full
        for u in space.opens:
            if u >> x & 1:
                nbhd &= u
        if not any(f & ~nbhd == 0 and set_way_below_d(space, f, 1 << x) for f in range(1, space.full + 1)):
            return False, {"point": x}
    return True, None


def check_d_meet_continuous(space: FiniteSpace) -> tuple[bool, object]:
    """Directed ``D`` converging to ``x`` forces ``x`` into cl(down D meet down x)."""
    poset = space.poset
    for d, lim in space.limits.items():
        dd = poset.down_set(d)
        for x in bits(lim):
            if not _closure_fast(space, dd & poset.down[x]) >> x & 1:
                return False, {"directed": to_list(d), "point": x}
    return True, None


def check_meet_opens(space: FiniteSpace) -> tuple[bool, object]:
    """up(U meet down F) is open for every open ``U`` and nonempty ``F``."""
    poset = space.poset
    for f in range(1, space.full + 1):
        df = poset.down_set(f)
        for u in space.opens:
            if not space.is_open(poset.up_set(u & df)):
                return False, {"finite": to_list(f), "open": to_list(u)}
    return True, None


def check_one_step(space: FiniteSpace) -> tuple[bool, object]:
    for a in range(space.full + 1):
        t, c = tilde(space, a), _closure_fast(space, a)
        if t != c:
            return False, {"set": to_list(a), "tilde": to_list(t), "closure": to_list(c)}
    return True, None


def check_weak_one_step(space: FiniteSpace) -> tuple[bool, object]:
    for a in range(space.full + 1):
        h, c = hat(space, a), _closure_fast(space, a)
        if h != c:
            return False, {"set": to_list(a), "hat": to_list(h), "closure": to_list(c)}
    return True, None


PROPERTY_CHECKS = {
    "t0": check_t0,
    "monotone_determined": check_monotone_determined,
    "d_continuous": check_d_continuous,
    "directed_approximants": check_directed_approximants,
    "c_space": check_c_space,
    "d_quasicontinuous": check_d_quasicontinuous,
    "finite_approximants": check_finite_approximants,
    "locally_hypercompact": check_locally_hypercompact,
    "d_meet_continuous": check_d_meet_continuous,
    "meet_opens": check_meet_opens,
    "one_step_closure": check_one_step,
    "weak_one_step_closure": check_weak_one_step,
}

# pairs (or triples) of flags proven equivalent on monotone determined spaces
EQUIVALENCES = {
    "Thm2.5": ("d_continuous", "c_space", "directed_approximants"),
    "Thm2.11": ("d_quasicontinuous", "locally_hypercompact", "finite_approximants"),
    "Lemma2.14": ("d_meet_continuous", "meet_opens"),
}


def property_flags(space: FiniteSpace) -> tuple[dict[str, bool], dict[str, object]]:
    flags, cex = {}, {}
    for name, check in PROPERTY_CHECKS.items():
        ok, payload = check(space)
        flags[name] = ok
        if not ok:
            cex[name] = payload
    return flags, cex


def classify(space: FiniteSpace) -> Report:
    """All property flags plus agreement of every proven equivalence."""
    report = Report("classify")
    flags, cex = property_flags(space)
    for name, ok in flags.items():
        report.record(name, ok, cex.get(name))
    for thm, names in EQUIVALENCES.items():
        values = {k: flags[k] for k in names}
        report.record(f"agree:{thm}", len(set(values.values())) == 1, values)
    combined = flags["d_quasicontinuous"] and flags["d_meet_continuous"]
    report.record("agree:Thm6.15", flags["c_space"] == combined,
                  {"c_space": flags["c_space"], "quasicontinuous_and_meet": combined})
    report.stats["points"] = space.n
    report.stats["opens"] = len(space.opens)
    return report


__all__ = ["classify", "property_flags", "PROPERTY_CHECKS", "EQUIVALENCES"]
