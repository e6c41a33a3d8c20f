"""Fact suites reproducing the distinctions the witnesses exist to exhibit."""

from __future__ import annotations

from itertools import product

from ..classify import classify
from ..convergence import Mode
from ..report import Report
from .decide import (
    self_check, truncate, truncate_poset, truncation_points, w_classify, w_converges, w_converges_mode,
    w_order, w_set_way_below_d, w_way_below_d, w_way_below_points,
)
from .spaces import A, INF, Example63, OmegaChain, WitnessSpace
from .symbolic import Chain, ChainTail, FiniteSet, I0, IdealDescriptor, parse_net

ALT = parse_net("alt:a")

CATALOGUE_NETS = ("alt:a", "alt:inf", "const:a", "const:inf", "const:0", "const:3", "chain",
                  ";a,[j/1+0]", "a,inf;[j/2+1]")
CATALOGUE_IDEALS = (I0, IdealDescriptor("FiniteGenerated", ()), IdealDescriptor("FiniteGenerated", ((0, 1, 2),)),
                    IdealDescriptor("PowerSet"))


def _truncation_agreement(report: Report, w: WitnessSpace, max_k: int = 20) -> None:
    for k in range(1, max_k + 1):
        pts = truncation_points(w, k)
        poset = truncate_poset(w, k)
        for (i, p), (j, q) in product(enumerate(pts), repeat=2):
            if poset.le(i, j) != w_order(w, p, q):
                report.record("truncate:order-agreement", False, {"k": k, "x": str(p), "y": str(q)})
                return
    report.record("truncate:order-agreement", True)


def example63_core() -> Report:
    """Order, classification, d-way-below and the alternating net."""
    w = Example63()
    report = Report("witness63")
    report.record("order(a,inf)", w_order(w, A, INF), {"x": "a", "y": "inf"})
    report.record("not order(a,5)", not w_order(w, A, Chain("N", 5)), {"x": "a", "y": "5"})
    report.record("tail->a", w_converges(w, ChainTail("N", 0), A), {"directed": "tail(N,0)", "point": "a"})

    cls = w_classify(w)
    report.record("locally_hypercompact", cls.sets["locally_hypercompact"],
                  cls.counterexample.get("locally_hypercompact", {"value": False}))
    report.record("not c_space", not cls.sets["c_space"], {"value": True})
    report.record("not d_meet_continuous", not cls.sets["d_meet_continuous"], {"value": True})
    report.record("monotone_determined", cls.sets["monotone_determined"],
                  cls.counterexample.get("monotone_determined", {"value": False}))
    report.sets["classify"] = dict(cls.sets)
    report.sets["classify_witnesses"] = dict(cls.counterexample)

    for n in range(101):
        if not report.record("{n,a}<<_d a", w_set_way_below_d(w, (Chain("N", n), A), A), {"n": n}):
            break
    below = w_way_below_points(w, A)
    report.record("d-way-below(a)=empty", not below, {"points": [str(p) for p in below]})
    report.record("not d_continuous", not below, {"points": [str(p) for p in below]})

    igs = w_converges_mode(w, ALT, I0, Mode.IGS, A)
    is_ = w_converges_mode(w, ALT, I0, Mode.IS, A)
    i_tau = w_converges_mode(w, ALT, I0, Mode.I, A)
    report.record("alt:IGS->a", igs, {"net": ALT.describe(), "ideal": "i0", "IGS": igs})
    report.record("alt:not IS->a", not is_, {"net": ALT.describe(), "ideal": "i0", "IS": is_})
    report.record("Cor5.12:L_IS-not-topological", i_tau and not is_, {"I": i_tau, "IS": is_})
    return report


def example63_facts() -> Report:
    """The core facts plus catalogue sweeps, truncations and the self-check."""
    w = Example63()
    report = example63_core()

    for text, ideal in product(CATALOGUE_NETS, CATALOGUE_IDEALS):
        net = parse_net(text)
        for x in w.points(4):
            i_conv = w_converges_mode(w, net, ideal, Mode.I, x)
            g_conv = w_converges_mode(w, net, ideal, Mode.IGS, x)
            if not report.record("Thm6.9:catalogue", i_conv == g_conv,
                                 {"net": text, "ideal": ideal.describe(), "point": str(x), "I": i_conv, "IGS": g_conv}):
                break
            s_conv = w_converges_mode(w, net, ideal, Mode.IS, x)
            report.record("Prop6.2:catalogue", not s_conv or g_conv,
                          {"net": text, "ideal": ideal.describe(), "point": str(x)})
    for y, x in product(w.points(4), repeat=2):
        const = parse_net(f"const:{y}")
        got = w_converges_mode(w, const, IdealDescriptor("FiniteGenerated", ()), Mode.IS, x)
        report.record("constant-net", got == w_order(w, x, y), {"constant": str(y), "point": str(x)})

    trunc = classify(truncate(w, 3))
    report.record("truncate(3):classify-all-true", trunc.passed, {"failures": trunc.failures()})
    report.stats["truncate3_points"] = truncate(w, 3).n
    _truncation_agreement(report, w)
    report.merge(self_check(w), "self_check:")
    return report


def omega_chain_facts() -> Report:
    w = OmegaChain()
    report = Report("omegachain")
    pts = w.points(8)
    for x, y in product(pts, repeat=2):
        if not report.record("way_below=order", w_way_below_d(w, x, y) == w_order(w, x, y),
                             {"x": str(x), "y": str(y)}):
            break
    cls = w_classify(w)
    report.record("c_space", cls.sets["c_space"], cls.counterexample.get("c_space", {"value": False}))
    got = w_converges(w, FiniteSet((Chain("N", 3),)), Chain("N", 5))
    report.record("not {3}->5", not got, {"directed": "{3}", "point": "5"})
    report.record("truncate(4)=chain", truncate(w, 4).poset == truncate(w, 4).poset.chain(4), {"k": 4})
    _truncation_agreement(report, w)
    report.merge(self_check(w), "self_check:")
    return report


def witness_facts(w: WitnessSpace) -> Report:
    if isinstance(w, Example63):
        return example63_facts()
    return omega_chain_facts()
