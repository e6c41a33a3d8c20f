"""Ideal convergence of nets on finite spaces.

Six modes are decided exactly from their definitions:

``I``       every open neighbourhood's defect set lies in the ideal
``LIMINF``  order-theoretic: a directed set with a supremum above ``x``
``IS``      a directed set converging to ``x`` whose members are eventually below
``ISL``     ``IS`` plus: any eventual lower bound lies below ``x``
``IGS``     like ``IS`` with a directed family of finite sets
``IGSL``    ``IGS`` plus: any eventual finite lower bound lies below ``x``

"Eventually" always means "the defect set belongs to the ideal".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations, product
from typing import Callable, Iterator, Sequence

from .ideal import Ideal, IndexSet, enumerate_ideals, make_I0
from .poset import FinitePoset, bits, is_smyth_directed, to_list, to_mask
from .space import FiniteSpace, lawson, md_opens


class ConvergenceError(ValueError):
    pass


class Mode(str, Enum):
    I = "I"
    LIMINF = "LIMINF"
    IS = "IS"
    ISL = "ISL"
    IGS = "IGS"
    IGSL = "IGSL"


@dataclass(frozen=True)
class Net:
    index: IndexSet
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.index.size:
            raise ConvergenceError(f"net has {len(self.values)} values for {self.index.size} indices")

    @cached_property
    def positions(self) -> dict[int, int]:
        """point -> mask of indices carrying that point."""
        out: dict[int, int] = {}
        for j, p in enumerate(self.values):
            out[p] = out.get(p, 0) | 1 << j
        return out

    def defect(self, target: int) -> int:
        """Indices ``j`` whose value is outside ``target``."""
        out = 0
        for p, where in self.positions.items():
            if not target >> p & 1:
                out |= where
        return out

    def describe(self) -> str:
        return ",".join(f"{j}:{p}" for j, p in enumerate(self.values))


def parse_net(text: str, index: IndexSet) -> Net:
    """``"0:1,1:0,2:1"`` -> net; every index must be assigned exactly once."""
    table: dict[int, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = re.fullmatch(r"(\d+):(\d+)", chunk)
        if not m:
            raise ConvergenceError(f"bad net entry {chunk!r}")
        j, p = int(m.group(1)), int(m.group(2))
        if j in table:
            raise ConvergenceError(f"index {j} assigned twice")
        table[j] = p
    if sorted(table) != list(range(index.size)):
        raise ConvergenceError("net must assign every index of the index set")
    return Net(index, tuple(table[j] for j in range(index.size)))


def _check_inputs(space: FiniteSpace, net: Net, ideal: Ideal, x: int) -> None:
    if ideal.index != net.index:
        raise ConvergenceError("ideal and net live on different index sets")
    if any(not 0 <= p < space.n for p in net.values):
        raise ConvergenceError("net takes a value outside the carrier")
    if not 0 <= x < space.n:
        raise ConvergenceError(f"point {x} outside the carrier")


def neighbourhood_core(space: FiniteSpace, x: int) -> int:
    """Intersection of all open sets containing ``x``."""
    out = space.full
    for u in space.opens:
        if u >> x & 1:
            out &= u
    return out


def _eventually_above(space: FiniteSpace, net: Net, ideal: Ideal) -> int:
    """Points ``e`` with {j : x_j not >= e} in the ideal."""
    return to_mask(e for e in range(space.n) if net.defect(space.poset.up[e]) in ideal)


def i_converges(topology: Sequence[int], net: Net, ideal: Ideal, x: int) -> bool:
    return all(net.defect(u) in ideal for u in topology if u >> x & 1)


def liminf_converges(poset: FinitePoset, net: Net, ideal: Ideal, x: int) -> bool:
    good = to_mask(e for e in range(poset.n) if net.defect(poset.up[e]) in ideal)
    for d in poset.directed_subsets:
        if d & ~good:
            continue
        s = poset.sup(d)
        if s is not None and poset.le(x, s):
            return True
    return False


def is_converges(space: FiniteSpace, net: Net, ideal: Ideal, x: int) -> bool:
    good = _eventually_above(space, net, ideal)
    return any(d & ~good == 0 and lim >> x & 1 for d, lim in space.limits.items())


def isl_converges(space: FiniteSpace, net: Net, ideal: Ideal, x: int) -> bool:
    good = _eventually_above(space, net, ideal)
    return is_converges(space, net, ideal, x) and good & ~space.poset.down[x] == 0


def igs_converges(space: FiniteSpace, net: Net, ideal: Ideal, x: int) -> bool:
    # A finite Smyth-directed family has a member inside the up-closure of
    # all others; that member alone is a directed family with the same
    # convergence (open sets are upper sets) and no new defect sets.  So the
    # existential over families reduces to singletons {F}, and {F} converges
    # to x iff F sits in every open set around x.  Cross-checked against
    # igs_converges_families in the tests.
    core = neighbourhood_core(space, x)
    up_set = space.poset.up_set
    for f in range(1, space.full + 1):
        if f & ~core == 0 and net.defect(up_set(f)) in ideal:
            return True
    return False


def igs_converges_families(space: FiniteSpace, net: Net, ideal: Ideal, x: int, max_family: int | None = None) -> bool:
    """IGS by enumerating whole families of nonempty finite sets (tiny spaces only)."""
    members = list(range(1, space.full + 1))
    good = [f for f in members if net.defect(space.poset.up_set(f)) in ideal]
    nbhds = [u for u in space.opens if u >> x & 1]
    top = len(good) if max_family is None else min(max_family, len(good))
    for size in range(1, top + 1):
        for fam in combinations(good, size):
            if not is_smyth_directed(space.poset, fam):
                continue
            if all(any(f & ~u == 0 for f in fam) for u in nbhds):
                return True
    return False


def igsl_converges(space: FiniteSpace, net: Net, ideal: Ideal, x: int) -> bool:
    if not igs_converges(space, net, ideal, x):
        return False
    up_set = space.poset.up_set
    for f in range(1, space.full + 1):
        upf = up_set(f)
        if net.defect(upf) in ideal and not upf >> x & 1:
            return False
    return True


Decider = Callable[[FiniteSpace, Net, Ideal, Mode, int, str], bool]


def resolve_topology(space: FiniteSpace, wrt) -> Sequence[int]:
    if wrt == "tau":
        return space.opens
    if wrt == "lawson":
        return lawson(space)
    if isinstance(wrt, (tuple, list, frozenset, set)):
        return tuple(wrt)
    raise ConvergenceError(f"unknown topology selector {wrt!r}")


def converges_mode(space: FiniteSpace, net: Net, ideal: Ideal, mode, x: int, wrt="tau") -> bool:
    """Decide whether ``net`` converges to ``x`` in the given mode.

    ``wrt`` selects the topology for mode ``I`` (``"tau"``, ``"lawson"`` or an
    explicit open family); the other modes are defined through the space's
    own topology and order.
    """
    mode = Mode(mode)
    _check_inputs(space, net, ideal, x)
    if mode is Mode.I:
        return i_converges(resolve_topology(space, wrt), net, ideal, x)
    if mode is Mode.LIMINF:
        return liminf_converges(space.poset, net, ideal, x)
    if mode is Mode.IS:
        return is_converges(space, net, ideal, x)
    if mode is Mode.ISL:
        return isl_converges(space, net, ideal, x)
    if mode is Mode.IGS:
        return igs_converges(space, net, ideal, x)
    return igsl_converges(space, net, ideal, x)


# ---------------------------------------------------------------------------
# bounded enumeration of (net, ideal) cases

@dataclass(frozen=True)
class Bounds:
    max_index: int = 3
    proper_only: bool = False

    def __post_init__(self):
        if self.max_index < 1:
            raise ConvergenceError("bounds must be positive")


@dataclass(frozen=True)
class Case:
    net: Net
    ideal: Ideal
    kind: str  # "chain" or "directed"

    def payload(self) -> dict:
        return {"index": self.net.index.describe(), "net": self.net.describe(), "ideal": self.ideal.describe()}


def index_chains(bounds: Bounds) -> Iterator[IndexSet]:
    for m in range(1, bounds.max_index + 1):
        yield IndexSet.chain(m)


def directed_set_net(space: FiniteSpace, d: int) -> Net:
    """The directed set ``d`` viewed as a net indexed by itself."""
    pts = to_list(d)
    rel = [[space.poset.le(a, b) for b in pts] for a in pts]
    return Net(IndexSet(FinitePoset(rel)), tuple(pts))


def enumerate_cases(space: FiniteSpace, bounds: Bounds) -> list[Case]:
    """All nets on chains up to ``max_index`` with all their ideals, then
    every directed subset as a net (with all of its ideals)."""
    cases = []
    for index in index_chains(bounds):
        ideals = [i for i in enumerate_ideals(index) if i.proper or not bounds.proper_only]
        for values in product(range(space.n), repeat=index.size):
            net = Net(index, values)
            cases.extend(Case(net, ideal, "chain") for ideal in ideals)
    for d in space.directed:
        net = directed_set_net(space, d)
        ideals = [i for i in enumerate_ideals(net.index) if i.proper or not bounds.proper_only]
        cases.extend(Case(net, ideal, "directed") for ideal in ideals)
    return cases


@dataclass
class InducedTopology:
    mode: Mode
    exact: tuple[int, ...]
    enumerated: tuple[int, ...]
    consistent: bool
    rejected_by_constant_net: bool

    def as_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "exact": [to_list(u) for u in self.exact],
            "enumerated": [to_list(u) for u in self.enumerated],
            "consistent": self.consistent,
            "rejected_by_constant_net": self.rejected_by_constant_net,
        }


def default_decider(space, net, ideal, mode, x, wrt="tau"):
    return converges_mode(space, net, ideal, mode, x, wrt)


def enumerated_topology(space: FiniteSpace, mode: Mode, cases: Sequence[Case],
                        decider: Decider = default_decider) -> tuple[int, ...]:
    """Subsets ``U`` such that every enumerated convergent case into ``U``
    has its ``U``-defect set in the ideal."""
    convergent = [
        (case, x) for case in cases for x in range(space.n)
        if decider(space, case.net, case.ideal, mode, x, "tau")
    ]
    out = []
    for u in range(space.full + 1):
        if all(case.net.defect(u) in case.ideal for case, x in convergent if u >> x & 1):
            out.append(u)
    return tuple(out)


def constant_net_rejects(space: FiniteSpace, mode: Mode, u: int, decider: Decider = default_decider) -> bool:
    """A non-upper ``u`` is rejected by a constant net with the ideal {{}}."""
    index = IndexSet.chain(1)
    trivial = Ideal.trivial(index)
    for x in bits(u):
        for y in bits(space.poset.up[x] & ~u):
            net = Net(index, (y,))
            if decider(space, net, trivial, mode, x, "tau") and net.defect(u) not in trivial:
                return True
    return False


def induced_topology(space: FiniteSpace, mode, bounds: Bounds = Bounds(),
                     decider: Decider = default_decider) -> InducedTopology:
    """The open family a convergence mode induces, predicted and enumerated.

    ``exact`` is the predicted family: the monotone determined opens for IS
    and IGS, and the Lawson topology (a lower bound) for ISL and IGSL.
    """
    mode = Mode(mode)
    if mode in (Mode.I, Mode.LIMINF):
        raise ConvergenceError("induced topology is defined for IS, ISL, IGS and IGSL")
    cases = enumerate_cases(space, bounds)
    enumerated = enumerated_topology(space, mode, cases, decider)
    if mode in (Mode.IS, Mode.IGS):
        exact = md_opens(space)
    else:
        exact = lawson(space)
    consistent = set(exact) <= set(enumerated)
    rejected = True
    if mode in (Mode.IS, Mode.IGS):
        non_upper = [u for u in range(space.full + 1) if not space.poset.is_upper(u)]
        rejected = all(constant_net_rejects(space, mode, u, decider) for u in non_upper)
        rejected = rejected and not any(u in enumerated for u in non_upper)
        consistent = consistent and rejected
    return InducedTopology(mode, tuple(exact), enumerated, consistent, rejected)


def directed_set_cases(space: FiniteSpace) -> Iterator[tuple[int, Net, Ideal]]:
    for d in space.directed:
        net = directed_set_net(space, d)
        yield d, net, make_I0(net.index)
