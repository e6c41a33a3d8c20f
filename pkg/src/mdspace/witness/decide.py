"""Decision procedures over catalogued witness spaces."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, TypeVar

from ..convergence import Mode
from ..poset import FinitePoset
from ..report import Report
from ..space import MAX_SPACE_POINTS, FiniteSpace
from .spaces import WitnessSpace, finite_sets
from .symbolic import (
    Chain, ChainTail, DirectedDescriptor, Fin, FiniteSet, IdealDescriptor, NetDescriptor,
    SymPoint, SymSet, TailUnion, WitnessError,
)

T = TypeVar("T")


def _stable(fn: Callable[[int], T], bound: int) -> T:
    """Evaluate a parameter sweep at ``bound`` and ``2 * bound``; they must agree."""
    first, second = fn(bound), fn(2 * bound)
    if first != second:
        raise WitnessError(f"sweep did not stabilise between bounds {bound} and {2 * bound}")
    return first


def _bound(*constants: int) -> int:
    # rounded up so that nearby queries share cached sweeps
    need = max(constants, default=0) + 3
    return -(-need // 16) * 16


def _k(p: SymPoint) -> int:
    return p.k if isinstance(p, Chain) else 0


@lru_cache(maxsize=4096)
def _minimal_nbhds(w: WitnessSpace, x: SymPoint, bound: int) -> tuple[SymSet, ...]:
    around = [u for u in w.opens(bound) if x in u]
    return tuple(u for u in around if not any(v != u and v.subset(u) for v in around))


def _converges(w: WitnessSpace, d: SymSet, x: SymPoint, bound: int) -> bool:
    # meeting the smallest neighbourhoods is enough: supersets are met too
    return all(d.meets(u) for u in _minimal_nbhds(w, x, bound))


def w_order(w: WitnessSpace, x: SymPoint, y: SymPoint) -> bool:
    return w.leq(x, y)


def w_converges(w: WitnessSpace, d: DirectedDescriptor, x: SymPoint) -> bool:
    w.validate(d)
    w.check_point(x)
    s = d.symset()
    return _stable(lambda b: _converges(w, s, x, b), _bound(*d.constants(), _k(x)))


@lru_cache(maxsize=4096)
def _converging(w: WitnessSpace, y: SymPoint, bound: int) -> tuple[SymSet, ...]:
    return tuple(s for s in (d.symset() for d in w.directed_representatives(bound))
                 if _converges(w, s, y, bound))


def _set_way_below(w: WitnessSpace, g: tuple, y: SymPoint, bound: int) -> bool:
    target = w.up_set(g)
    return all(s.meets(target) for s in _converging(w, y, bound))


def w_set_way_below_d(w: WitnessSpace, g, y: SymPoint) -> bool:
    g = tuple(g)
    if not g:
        raise WitnessError("G must be nonempty")
    for p in g + (y,):
        w.check_point(p)
    return _stable(lambda b: _set_way_below(w, g, y, b), _bound(*map(_k, g), _k(y)))


def w_way_below_d(w: WitnessSpace, x: SymPoint, y: SymPoint) -> bool:
    return w_set_way_below_d(w, (x,), y)


def w_way_below_points(w: WitnessSpace, y: SymPoint, bound: int = 8) -> list[SymPoint]:
    """Points among the first ``bound`` chain points and the finite part that are d-way-below ``y``."""
    return [p for p in w.points(bound) if w_way_below_d(w, p, y)]


# classification --------------------------------------------------------------

def _interior(w: WitnessSpace, s: SymSet, bound: int) -> SymSet:
    out = SymSet()
    for u in w.opens(bound):
        if u.subset(s):
            out = out.union(u)
    return out


def _c_space(w: WitnessSpace, bound: int):
    pts, cands = w.points(bound), w.points(bound + 1)
    for u in w.opens(bound):
        for x in (p for p in pts if p in u):
            if not any(w.up(y).subset(u) and x in _interior(w, w.up(y), bound) for y in cands if y in u):
                return False, {"open": str(u), "point": str(x)}
    return True, None


def _locally_hypercompact(w: WitnessSpace, bound: int):
    pts = w.points(bound)
    # candidates reach one step past the open sets' parameters
    fams = finite_sets(w, bound + 1)
    for u in w.opens(bound):
        for x in (p for p in pts if p in u):
            if not any(w.up_set(f).subset(u) and x in _interior(w, w.up_set(f), bound) for f in fams):
                return False, {"open": str(u), "point": str(x)}
    return True, None


def _d_meet(w: WitnessSpace, bound: int):
    for d in w.directed_representatives(bound):
        s = d.symset()
        for x in w.points(bound):
            if not _converges(w, s, x, bound):
                continue
            a = w.down_set(s).meet(w.down(x))
            if not all(a.meets(u) for u in w.opens(bound) if x in u):
                return False, {"directed": str(d), "point": str(x), "meet": str(a)}
    return True, None


def _opens_are_scott(w: WitnessSpace, bound: int):
    for u in w.opens(bound):
        if not w.is_scott_open(u):
            return False, {"open": str(u)}
    return True, None


def w_classify(w: WitnessSpace, bound: int = 6) -> Report:
    report = Report(f"classify:{w.name}")
    checks = {
        "monotone_determined": _opens_are_scott,
        "c_space": _c_space,
        "locally_hypercompact": _locally_hypercompact,
        "d_meet_continuous": _d_meet,
    }
    for flag, fn in checks.items():
        ok = _stable(lambda b: fn(w, b)[0], bound)
        report.sets[flag] = ok
        if not ok:
            report.counterexample[flag] = fn(w, bound)[1]
    report.notes.append("sets hold the classification; false values carry a witness in counterexample")
    return report


# ideal convergence -------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _good(net: NetDescriptor, ideal: IdealDescriptor, s: SymSet) -> bool:
    return ideal.contains(net.defect(s))


def _decide(w: WitnessSpace, net: NetDescriptor, ideal: IdealDescriptor, mode: Mode,
            x: SymPoint, bound: int) -> bool:
    if mode is Mode.I:
        return all(_good(net, ideal, u) for u in _minimal_nbhds(w, x, bound))
    if mode in (Mode.IS, Mode.ISL):
        ok = any(
            _converges(w, d.symset(), x, bound) and all(_good(net, ideal, w.up(p)) for p in d.members(bound))
            for d in w.directed_representatives(bound)
        )
        if mode is Mode.IS or not ok:
            return ok
        return all(w.leq(y, x) for y in w.points(bound) if _good(net, ideal, w.up(y)))
    families = [(f,) for f in finite_sets(w, bound)] + [fam.members for fam in w.family_schemas(bound)]
    ok = any(
        all(any(all(p in u for p in f) for f in fam)
            for u in _minimal_nbhds(w, x, bound))
        and all(_good(net, ideal, w.up_set(f)) for f in fam)
        for fam in families
    )
    if mode is Mode.IGS or not ok:
        return ok
    return all(x in w.up_set(f) for f in finite_sets(w, bound) if _good(net, ideal, w.up_set(f)))


def w_converges_mode(w: WitnessSpace, net: NetDescriptor, ideal: IdealDescriptor, mode, x: SymPoint) -> bool:
    """Decide a convergence mode with respect to the witness's Scott topology.

    Quantifiers over open sets, directed sets and directed families run over
    the witness's parameterised catalogue up to a bound derived from the
    constants in the query, and again at twice that bound.
    """
    mode = Mode(mode)
    if mode is Mode.LIMINF:
        raise WitnessError("LIMINF is not supported on witness spaces")
    w.check_point(x)
    for p in _net_points(net):
        w.check_point(p)
    m, block, pre = net.max_step(), len(net.block), len(net.prefix)
    consts = net.constants() + ideal.constants() + [_k(x)]
    bound = (max(consts, default=0) + 2) * (m + 1) + pre + block
    return _stable(lambda b: _decide(w, net, ideal, mode, x, b), bound)


def _net_points(net: NetDescriptor) -> list[SymPoint]:
    return [net.at(j) for j in range(len(net.prefix) + len(net.block))]


# truncation --------------------------------------------------------------------

def truncation_points(w: WitnessSpace, k: int) -> list[SymPoint]:
    """Chain points ``0..k-1`` of each chain, then the finite part, in that order."""
    return [Chain(ch, i) for ch in w.chains for i in range(k)] + [Fin(f) for f in w.finite]


def truncate_poset(w: WitnessSpace, k: int) -> FinitePoset:
    if k < 1:
        raise WitnessError("truncation size must be at least 1")
    pts = truncation_points(w, k)
    return FinitePoset([[w.leq(p, q) for q in pts] for p in pts])


def truncate(w: WitnessSpace, k: int) -> FiniteSpace:
    """The retained points with the induced order and its Alexandroff topology.

    Every truncation is finite, hence a c-space, whatever ``w`` is; only
    order-level facts transfer back.
    """
    poset = truncate_poset(w, k)
    if poset.n > MAX_SPACE_POINTS:
        raise WitnessError(f"truncation has {poset.n} points; spaces are limited to {MAX_SPACE_POINTS}")
    return FiniteSpace.alexandroff(poset)


def truncate_dsl(w: WitnessSpace, k: int) -> str:
    pts = truncation_points(w, k)
    header = f"# {w.name} truncated at {k}: " + ", ".join(f"{i}={p}" for i, p in enumerate(pts)) + "\n"
    return header + truncate(w, k).to_dsl()


# self check ----------------------------------------------------------------------

def _candidates(w: WitnessSpace, bound: int) -> list[SymSet]:
    fins = [Fin(f) for f in w.finite]
    out = []
    for mask in range(1 << len(fins)):
        chosen = [p for i, p in enumerate(fins) if mask >> i & 1]
        out.append(SymSet.make(chosen))
        for ch in w.chains:
            for c in range(bound + 1):
                out.append(SymSet.make(chosen, {ch: c}))
    return out


def _is_upper(w: WitnessSpace, s: SymSet, bound: int) -> bool:
    # probe past every constant of s so tails are exercised
    probe = w.points(max(s.constants(), default=0) + bound + 2)
    return all(w.up(p).subset(s) for p in probe if p in s)


def _scott_by_definition(w: WitnessSpace, s: SymSet, bound: int) -> bool:
    if not _is_upper(w, s, bound):
        return False
    for d in w.directed_representatives(bound):
        top = w.sup(d)
        if top is not None and top in s and not d.symset().meets(s):
            return False
    return True


def self_check(w: WitnessSpace, bound: int = 6) -> Report:
    report = Report(f"self_check:{w.name}")
    opens = w.opens(bound)
    keyed = set(opens)
    for u in opens:
        if not report.record("opens:upper", _is_upper(w, u, bound), {"open": str(u)}):
            break
    for u in opens:
        for v in opens:
            report.record("opens:union", u.union(v) in keyed, {"pair": [str(u), str(v)]})
            report.record("opens:intersection", u.meet(v) in keyed, {"pair": [str(u), str(v)]})
    for s in _candidates(w, bound):
        declared, defined = w.is_scott_open(s), _scott_by_definition(w, s, bound)
        report.record("opens:characterization", declared == defined,
                      {"set": str(s), "declared": declared, "definition": defined})
        report.record("opens:catalogued", (s in keyed) == declared, {"set": str(s), "declared": declared})
    report.merge(descriptor_completeness(w))
    return report


def descriptor_completeness(w: WitnessSpace, max_k: int = 6) -> Report:
    """Directed subsets of truncations behave like their catalogued representatives.

    A finite directed set is compared with the singleton of its greatest
    element, and a chain subset followed by a tail with the tail starting at
    its least element; both must agree on convergence to every point and on
    meeting every principal up-set.
    """
    from ..poset import bits

    report = Report("descriptors")
    for k in range(1, max_k + 1):
        pts = truncation_points(w, k)
        trunc = truncate(w, k)
        probe = w.points(k + 2)
        for dmask in trunc.directed:
            members = tuple(pts[i] for i in bits(dmask))
            rep = FiniteSet((w.sup(FiniteSet(members)),))
            _compare(report, w, FiniteSet(members), rep, probe, k)
        for ch in w.chains:
            chain_pts = [p for p in pts if isinstance(p, Chain) and p.chain == ch]
            for mask in range(1 << len(chain_pts)):
                extra = tuple(p for i, p in enumerate(chain_pts) if mask >> i & 1)
                d = TailUnion(ChainTail(ch, k), extra)
                start = min([p.k for p in extra] + [k])
                _compare(report, w, d, ChainTail(ch, start), probe, k)
    report.stats["max_truncation"] = max_k
    return report


def _compare(report: Report, w: WitnessSpace, d, rep, probe, k: int) -> None:
    w.validate(d)
    ds, rs = d.symset(), rep.symset()
    for x in probe:
        same = _converges(w, ds, x, k + 2) == _converges(w, rs, x, k + 2)
        report.record("descriptors:convergence", same, {"directed": str(d), "representative": str(rep), "point": str(x)})
        same = ds.meets(w.up(x)) == rs.meets(w.up(x))
        report.record("descriptors:meets-up", same, {"directed": str(d), "representative": str(rep), "point": str(x)})
