"""Bounded verification of the convergence propositions on a finite space.

Each proposition is evaluated over every enumerated (net, ideal, point)
triple; the first violation in enumeration order becomes the counterexample.
Statements quantified over "non-trivial ideals" are checked twice: over
all proper ideals (as stated) and over admissible proper ideals only
(flag suffix ``[admissible]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .classify import property_flags
from .convergence import (
    Bounds, Case, Decider, Mode, Net, default_decider, directed_set_cases,
    enumerate_cases, enumerated_topology, i_converges, igs_converges_families,
    liminf_converges, constant_net_rejects,
)
from .ideal import Ideal, IndexSet
from .poset import bits, to_list
from .report import Report
from .space import FiniteSpace, converges, lawson, md_opens, upper_way_below

MODES = (Mode.IS, Mode.ISL, Mode.IGS, Mode.IGSL)


class SectionError(ValueError):
    pass


@dataclass
class _Table:
    """Decisions for every enumerated case and point, computed once."""

    space: FiniteSpace
    cases: list[Case]
    conv: dict[Mode, list[int]]        # per mode: case index -> mask of limits
    i_tau: list[int]
    i_lambda: list[int]
    lam: tuple[int, ...]

    @classmethod
    def build(cls, space: FiniteSpace, bounds: Bounds, decider: Decider) -> "_Table":
        cases = enumerate_cases(space, bounds)
        conv = {}
        for mode in MODES:
            conv[mode] = [
                sum(1 << x for x in range(space.n) if decider(space, c.net, c.ideal, mode, x, "tau"))
                for c in cases
            ]
        lam = lawson(space)
        i_tau = [sum(1 << x for x in range(space.n) if i_converges(space.opens, c.net, c.ideal, x)) for c in cases]
        i_lam = [sum(1 << x for x in range(space.n) if i_converges(lam, c.net, c.ideal, x)) for c in cases]
        return cls(space, cases, conv, i_tau, i_lam, lam)


def _cex(case: Case, x: int, **extra) -> dict:
    out = case.payload()
    out["point"] = x
    out.update(extra)
    return out


def _check_biconditional(report: Report, flag: str, tab: _Table, left: dict | list, right: list,
                         case_filter: Callable[[Case], bool] = lambda c: True) -> None:
    for k, case in enumerate(tab.cases):
        if not case_filter(case):
            continue
        diff = left[k] ^ right[k]
        if diff:
            x = next(bits(diff))
            report.record(flag, False, _cex(case, x, left=bool(left[k] >> x & 1), right=bool(right[k] >> x & 1)))
            return
    report.record(flag, True)


def _check_implication(report: Report, flag: str, tab: _Table, left: list, right: list,
                       case_filter: Callable[[Case], bool] = lambda c: True) -> None:
    for k, case in enumerate(tab.cases):
        if not case_filter(case):
            continue
        bad = left[k] & ~right[k]
        if bad:
            report.record(flag, False, _cex(case, next(bits(bad))))
            return
    report.record(flag, True)


def _proper(case: Case) -> bool:
    return case.ideal.proper


def _proper_admissible(case: Case) -> bool:
    return case.ideal.proper and case.ideal.admissible


def _is_topology(space: FiniteSpace, fam: tuple[int, ...]) -> tuple[bool, object]:
    s = set(fam)
    if 0 not in s or space.full not in s:
        return False, {"missing": "empty set or carrier"}
    for a in fam:
        for b in fam:
            if a | b not in s:
                return False, {"union_of": [to_list(a), to_list(b)]}
            if a & b not in s:
                return False, {"intersection_of": [to_list(a), to_list(b)]}
    return True, None


def _is_basis(space: FiniteSpace, basis: list[int], topology: tuple[int, ...]) -> tuple[bool, object]:
    top = set(topology)
    for b in basis:
        if b not in top:
            return False, {"basis_member_not_open": to_list(b)}
    for u in topology:
        cover = 0
        for b in basis:
            if b & ~u == 0:
                cover |= b
        if cover != u:
            return False, {"open_not_union_of_basis": to_list(u)}
    return True, None


def _subset_flag(report: Report, flag: str, small, big) -> None:
    missing = sorted(set(small) - set(big))
    report.record(flag, not missing, {"missing": to_list(missing[0])} if missing else None)


def check_section(space: FiniteSpace, section: int, bounds: Bounds = Bounds(),
                  decider: Decider = default_decider) -> Report:
    """Verify the section-5 or section-6 convergence statements on ``space``.

    ``decider`` replaces the convergence decision procedure; the test-suite
    uses it to inject faulty deciders and confirm they are caught.
    """
    if section not in (5, 6):
        raise SectionError("section must be 5 or 6")
    tab = _Table.build(space, bounds, decider)
    flags, _ = property_flags(space)
    report = Report(f"section{section}")
    report.stats["cases"] = len(tab.cases)
    report.stats["points"] = space.n
    if section == 5:
        _section5(report, space, tab, flags, bounds, decider)
    else:
        _section6(report, space, tab, flags, bounds, decider)
    return report


def _section5(report, space, tab, flags, bounds, decider):
    poset = space.poset
    IS, ISL = tab.conv[Mode.IS], tab.conv[Mode.ISL]

    # constant net at y with the ideal {{}}: converges exactly to points below y
    index = IndexSet.chain(1)
    for y in range(space.n):
        net = Net(index, (y,))
        got = sum(1 << x for x in range(space.n) if decider(space, net, Ideal.trivial(index), Mode.IS, x, "tau"))
        if not report.record("Rem5.3", got == poset.down[y], {"constant": y, "limits": to_list(got)}):
            break
    # reading the trivial ideal as the power set makes every point a limit
    report.sets["Rem5.3[powerset-reading]:every-point-a-limit"] = all(
        decider(space, Net(index, (y,)), Ideal.power_set(index), Mode.IS, x, "tau")
        for y in range(space.n) for x in range(space.n)
    )

    _check_implication(report, "Lemma5.4", tab, IS, tab.i_tau)
    for d, net, i0 in directed_set_cases(space):
        for x in range(space.n):
            lhs = decider(space, net, i0, Mode.IS, x, "tau")
            if lhs != converges(space, d, x):
                report.record("Lemma5.4[directed]", False, {"directed": to_list(d), "point": x, "IS": lhs})
                break
        else:
            continue
        break
    else:
        report.record("Lemma5.4[directed]", True)

    _prop55(report, space, tab, _proper, "Prop5.5")
    _prop55(report, space, tab, _proper_admissible, "Prop5.5[admissible]")
    if flags["c_space"]:
        _prop56(report, space, tab, _proper, "Prop5.6")
        _prop56(report, space, tab, _proper_admissible, "Prop5.6[admissible]")

    exact = md_opens(space)
    for proper_only, tag in ((False, ""), (True, "[proper]")):
        cases = tab.cases if not proper_only else [c for c in tab.cases if c.ideal.proper]
        fam_is = enumerated_topology(space, Mode.IS, cases, decider)
        ok, cex = _is_topology(space, fam_is)
        report.record("Prop5.7" + tag, ok, cex)
        _subset_flag(report, "Lemma5.8" + tag, exact, fam_is)
        non_upper = [u for u in fam_is if not poset.is_upper(u)]
        report.record("Lemma5.8" + tag + ":rejects-non-upper", not non_upper,
                      {"accepted": to_list(non_upper[0])} if non_upper else None)
        report.record("Cor5.9" + tag, set(fam_is) == set(space.opens) == set(exact),
                      {"enumerated": [to_list(u) for u in fam_is]})
        ok, cex = _is_basis(space, list(space.way_below_up), fam_is)
        report.record("Cor5.10" + tag, ok, cex)
        fam_isl = enumerated_topology(space, Mode.ISL, cases, decider)
        _subset_flag(report, "Prop5.14" + tag, fam_is, fam_isl)
        _subset_flag(report, "Prop5.15" + tag, tab.lam, fam_isl)
        if not tag:
            report.sets["IS(X)"] = [to_list(u) for u in fam_is]
            report.sets["ISL(X)"] = [to_list(u) for u in fam_isl]
    non_upper = [u for u in range(space.full + 1) if not poset.is_upper(u)]
    report.record("Lemma5.8:constant-net-witness",
                  all(constant_net_rejects(space, Mode.IS, u, decider) for u in non_upper),
                  {"not_rejected": next((to_list(u) for u in non_upper
                                         if not constant_net_rejects(space, Mode.IS, u, decider)), None)})

    # c-space iff IS and tau-convergence agree on every case
    agree = all(IS[k] == tab.i_tau[k] for k in range(len(tab.cases)))
    report.record("Thm5.11", flags["c_space"] == agree, {"c_space": flags["c_space"], "modes_agree": agree})
    if flags["c_space"]:
        _check_biconditional(report, "Thm5.11:cases", tab, IS, tab.i_tau)
        _check_biconditional(report, "Thm5.16", tab, ISL, tab.i_lambda, _proper)
        _check_biconditional(report, "Thm5.16[admissible]", tab, ISL, tab.i_lambda, _proper_admissible)

    # order-level lim-inf versus IS on the Alexandroff topology of the order
    for k, case in enumerate(tab.cases):
        lim = sum(1 << x for x in range(space.n) if liminf_converges(poset, case.net, case.ideal, x))
        if lim != IS[k]:
            x = next(bits(lim ^ IS[k]))
            report.record("Thm5.2", False, _cex(case, x, liminf=bool(lim >> x & 1)))
            break
    else:
        report.record("Thm5.2", True)

    _check_implication(report, "Def5.13:ISL=>IS", tab, ISL, IS)


def _prop55(report, space, tab, case_filter, flag):
    """x way-below y iff every proper IS-convergent case to y is eventually above x."""
    IS = tab.conv[Mode.IS]
    up = space.poset.up
    for y in range(space.n):
        for x in range(space.n):
            rhs, witness = True, None
            for k, case in enumerate(tab.cases):
                if case_filter(case) and IS[k] >> y & 1 and case.net.defect(up[x]) not in case.ideal:
                    rhs, witness = False, case
                    break
            lhs = bool(space.way_below_down[y] >> x & 1)
            if lhs != rhs:
                cex = {"x": x, "y": y, "way_below": lhs}
                if witness is not None:
                    cex.update(witness.payload())
                report.record(flag, False, cex)
                return
    report.record(flag, True)


def _prop56(report, space, tab, case_filter, flag):
    IS = tab.conv[Mode.IS]
    up = space.poset.up
    for k, case in enumerate(tab.cases):
        if not case_filter(case):
            continue
        for y in range(space.n):
            rhs = all(case.net.defect(up[x]) in case.ideal for x in bits(space.way_below_down[y]))
            if bool(IS[k] >> y & 1) != rhs:
                report.record(flag, False, _cex(case, y, IS=bool(IS[k] >> y & 1)))
                return
    report.record(flag, True)


def _section6(report, space, tab, flags, bounds, decider):
    poset = space.poset
    IS, ISL, IGS, IGSL = (tab.conv[m] for m in MODES)
    lh = flags["locally_hypercompact"]

    _check_implication(report, "Prop6.2", tab, IS, IGS)
    _check_implication(report, "Rem6.3:IGS=>I", tab, IGS, tab.i_tau)
    _prop64(report, space, tab, _proper, "Prop6.4")
    _prop64(report, space, tab, _proper_admissible, "Prop6.4[admissible]")
    if lh:
        _prop65(report, space, tab, _proper, "Prop6.5")
        _prop65(report, space, tab, _proper_admissible, "Prop6.5[admissible]")

    exact = md_opens(space)
    for proper_only, tag in ((False, ""), (True, "[proper]")):
        cases = tab.cases if not proper_only else [c for c in tab.cases if c.ideal.proper]
        fam_is = enumerated_topology(space, Mode.IS, cases, decider)
        fam_igs = enumerated_topology(space, Mode.IGS, cases, decider)
        fam_isl = enumerated_topology(space, Mode.ISL, cases, decider)
        fam_igsl = enumerated_topology(space, Mode.IGSL, cases, decider)
        report.record("Lemma6.6" + tag, set(fam_igs) == set(fam_is) and set(exact) <= set(fam_igs),
                      {"IGS(X)": [to_list(u) for u in fam_igs], "IS(X)": [to_list(u) for u in fam_is]})
        non_upper = [u for u in fam_igs if not poset.is_upper(u)]
        report.record("Lemma6.6" + tag + ":rejects-non-upper", not non_upper,
                      {"accepted": to_list(non_upper[0])} if non_upper else None)
        report.record("Cor6.7" + tag, set(space.opens) == set(exact) == set(fam_is) == set(fam_igs),
                      {"IGS(X)": [to_list(u) for u in fam_igs]})
        if lh:
            basis = [upper_way_below(space, f) for f in range(1, space.full + 1)]
            ok, cex = _is_basis(space, basis, fam_igs)
            report.record("Cor6.8" + tag, ok, cex)
        _subset_flag(report, "Prop6.12" + tag, tab.lam, fam_igsl)
        _subset_flag(report, "Prop6.13" + tag, fam_igsl, fam_isl)
        if not tag:
            report.sets["IGS(X)"] = [to_list(u) for u in fam_igs]
            report.sets["IGSL(X)"] = [to_list(u) for u in fam_igsl]
    non_upper = [u for u in range(space.full + 1) if not poset.is_upper(u)]
    report.record("Lemma6.6:constant-net-witness",
                  all(constant_net_rejects(space, Mode.IGS, u, decider) for u in non_upper),
                  {"not_rejected": next((to_list(u) for u in non_upper
                                         if not constant_net_rejects(space, Mode.IGS, u, decider)), None)})

    agree = all(IGS[k] == tab.i_tau[k] for k in range(len(tab.cases)))
    report.record("Thm6.9", lh == agree, {"locally_hypercompact": lh, "modes_agree": agree})
    _check_implication(report, "Prop6.13:cases", tab, ISL, IGSL)
    _check_implication(report, "Prop6.13:cases[admissible]", tab, ISL, IGSL, _proper_admissible)
    if lh:
        _check_biconditional(report, "Thm6.14", tab, IGSL, tab.i_lambda, _proper)
        _check_biconditional(report, "Thm6.14[admissible]", tab, IGSL, tab.i_lambda, _proper_admissible)
    if flags["d_meet_continuous"]:
        for flag, filt in (("Thm6.16", _proper), ("Thm6.16[admissible]", _proper_admissible)):
            isl_ok = all(ISL[k] == tab.i_lambda[k] for k, c in enumerate(tab.cases) if filt(c))
            igsl_ok = all(IGSL[k] == tab.i_lambda[k] for k, c in enumerate(tab.cases) if filt(c))
            values = {"c_space": flags["c_space"], "ISL_matches_lawson": isl_ok, "IGSL_matches_lawson": igsl_ok}
            report.record(flag, flags["c_space"] == isl_ok == igsl_ok, values)

    _check_implication(report, "Def6.11:IGSL=>IGS", tab, IGSL, IGS)
    _check_implication(report, "Def5.13:ISL=>IS", tab, ISL, IS)

    if space.n <= 3:
        for k, case in enumerate(tab.cases):
            fam = sum(1 << x for x in range(space.n) if igs_converges_families(space, case.net, case.ideal, x))
            if fam != IGS[k]:
                x = next(bits(fam ^ IGS[k]))
                report.record("IGS:singleton-families", False, _cex(case, x, families=bool(fam >> x & 1)))
                break
        else:
            report.record("IGS:singleton-families", True)


def _prop64(report, space, tab, case_filter, flag):
    """If every proper IGS-convergent case to y is eventually in up G then G d-approximates y."""
    from .space import set_way_below_d
    IGS = tab.conv[Mode.IGS]
    for y in range(space.n):
        for g in range(1, space.full + 1):
            upg = space.poset.up_set(g)
            hyp = all(case.net.defect(upg) in case.ideal
                      for k, case in enumerate(tab.cases) if case_filter(case) and IGS[k] >> y & 1)
            if hyp and not set_way_below_d(space, g, 1 << y):
                report.record(flag, False, {"G": to_list(g), "y": y})
                return
    report.record(flag, True)


def _prop65(report, space, tab, case_filter, flag):
    from .space import set_way_below_d
    IGS = tab.conv[Mode.IGS]
    for k, case in enumerate(tab.cases):
        if not case_filter(case):
            continue
        for y in range(space.n):
            hyp = all(case.net.defect(space.poset.up_set(g)) in case.ideal
                      for g in range(1, space.full + 1) if set_way_below_d(space, g, 1 << y))
            if hyp and not IGS[k] >> y & 1:
                report.record(flag, False, _cex(case, y))
                return
    report.record(flag, True)
