"""Catalogued countable spaces with their Scott topologies."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .symbolic import (
    EMPTY, Chain, ChainTail, DirectedDescriptor, Fin, FiniteSet, SymPoint, SymSet,
    TailUnion, WitnessError,
)


@dataclass(frozen=True)
class Family:
    """A Smyth-directed family of finite sets, truncated at the sweep bound."""

    label: str
    members: tuple  # tuple of tuples of SymPoints


class WitnessSpace(ABC):
    """Fixed operation contract every witness implements.

    Infinite quantifiers are replaced by a parameter sweep up to ``bound``;
    callers re-run at twice the bound and insist on the same answer.
    """

    name: str
    chains: tuple[str, ...]
    finite: tuple[str, ...]

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other)

    def __hash__(self) -> int:
        return hash(self.name)

    @abstractmethod
    def leq(self, x: SymPoint, y: SymPoint) -> bool: ...

    @abstractmethod
    def up(self, x: SymPoint) -> SymSet: ...

    @abstractmethod
    def down(self, x: SymPoint) -> SymSet: ...

    @abstractmethod
    def opens(self, bound: int) -> tuple[SymSet, ...]:
        """Every open set whose parameters are at most ``bound``, including the empty set."""

    @abstractmethod
    def is_scott_open(self, s: SymSet) -> bool:
        """The declared characterization of Scott-open sets."""

    @abstractmethod
    def sup(self, d: DirectedDescriptor) -> SymPoint | None: ...

    @abstractmethod
    def family_schemas(self, bound: int) -> list[Family]: ...

    def points(self, bound: int) -> list[SymPoint]:
        return [Chain(ch, k) for ch in self.chains for k in range(bound)] + [Fin(f) for f in self.finite]

    def check_point(self, p: SymPoint) -> None:
        ok = (isinstance(p, Chain) and p.chain in self.chains) or (isinstance(p, Fin) and p.name in self.finite)
        if not ok:
            raise WitnessError(f"{p} is not a point of {self.name}")

    def up_set(self, pts) -> SymSet:
        out = EMPTY
        for p in pts:
            out = out.union(self.up(p))
        return out

    def down_set(self, s: SymSet) -> SymSet:
        out = EMPTY
        for p in s.fin:
            out = out.union(self.down(p))
        for ch, _ in s.tails:
            # every chain point lies below some point of a tail
            out = out.union(SymSet.make((), {ch: 0}))
        return out

    def directed_representatives(self, bound: int) -> list[DirectedDescriptor]:
        """Singletons for every point, then chain tails.

        A finite directed set has a greatest element and behaves like it for
        convergence and for meeting up-sets; an infinite directed subset of a
        chain behaves like a tail.  ``self_check`` tests both claims on
        truncations.
        """
        reps: list[DirectedDescriptor] = [FiniteSet((p,)) for p in self.points(bound)]
        reps += [ChainTail(ch, c) for ch in self.chains for c in range(bound + 1)]
        return reps

    def validate(self, d: DirectedDescriptor) -> None:
        if isinstance(d, FiniteSet):
            if not d.points:
                raise WitnessError("directed set must be nonempty")
            for p in d.points:
                self.check_point(p)
            for p in d.points:
                for q in d.points:
                    if not any(self.leq(p, r) and self.leq(q, r) for r in d.points):
                        raise WitnessError(f"{d} is not directed")
        elif isinstance(d, ChainTail):
            if d.chain not in self.chains or d.offset < 0:
                raise WitnessError(f"{d} does not name a chain tail")
        elif isinstance(d, TailUnion):
            self.validate(d.tail)
            for p in d.extra:
                if not (isinstance(p, Chain) and p.chain == d.tail.chain):
                    raise WitnessError(f"{d} is not directed: {p} has no bound in the tail")
        else:
            raise WitnessError(f"malformed descriptor {d!r}")


class OmegaChain(WitnessSpace):
    """The naturals with their usual order; Scott opens are the tails."""

    name = "OmegaChain"
    chains = ("N",)
    finite = ()

    def leq(self, x, y):
        self.check_point(x)
        self.check_point(y)
        return x.k <= y.k

    def up(self, x):
        return SymSet.make((), {"N": x.k})

    def down(self, x):
        return SymSet.make([Chain("N", k) for k in range(x.k + 1)])

    @lru_cache(maxsize=256)
    def opens(self, bound):
        return (EMPTY,) + tuple(SymSet.make((), {"N": n}) for n in range(bound + 1))

    def is_scott_open(self, s):
        # no directed subset of infinitely many naturals has a supremum here
        return s.is_empty() or (not s.fin and s.tail_map.keys() == {"N"})

    def sup(self, d):
        if isinstance(d, FiniteSet):
            return max(d.points, key=lambda p: p.k)
        return None

    def family_schemas(self, bound):
        return [Family(f"tail>={c}", tuple((Chain("N", n),) for n in range(c, bound + 1)))
                for c in range(bound + 1)]


INF, A = Fin("inf"), Fin("a")


class Example63(WitnessSpace):
    """Naturals, an isolated point ``a`` and a top ``inf`` above everything."""

    name = "Example63"
    chains = ("N",)
    finite = ("a", "inf")

    def leq(self, x, y):
        self.check_point(x)
        self.check_point(y)
        if x == y or y == INF:
            return True
        return isinstance(x, Chain) and isinstance(y, Chain) and x.k <= y.k

    def up(self, x):
        if x == INF:
            return SymSet.make([INF])
        if x == A:
            return SymSet.make([A, INF])
        return SymSet.make([INF], {"N": x.k})

    def down(self, x):
        if x == INF:
            return SymSet.make([A, INF], {"N": 0})
        if x == A:
            return SymSet.make([A])
        return SymSet.make([Chain("N", k) for k in range(x.k + 1)])

    @lru_cache(maxsize=256)
    def opens(self, bound):
        out = [EMPTY]
        for n in range(bound + 1):
            out.append(SymSet.make([INF], {"N": n}))
            out.append(SymSet.make([INF, A], {"N": n}))
        return tuple(out)

    def is_scott_open(self, s):
        if s.is_empty():
            return True
        # upper, and any set holding inf (the supremum of every infinite
        # chain subset) must hold a tail of the chain
        return INF in s and "N" in s.tail_map and s.fin <= {A, INF}

    def sup(self, d):
        if isinstance(d, FiniteSet):
            return next(p for p in d.points if all(self.leq(q, p) for q in d.points))
        return INF

    def family_schemas(self, bound):
        fams = []
        for c in range(bound + 1):
            for p in (A, INF):
                fams.append(Family(f"{{{p},n}}:n>={c}", tuple((p, Chain("N", n)) for n in range(c, bound + 1))))
            fams.append(Family(f"{{n}}:n>={c}", tuple((Chain("N", n),) for n in range(c, bound + 1))))
        return fams


def witness_catalog() -> list[WitnessSpace]:
    return [OmegaChain(), Example63()]


def get_witness(name: str) -> WitnessSpace:
    for w in witness_catalog():
        if w.name.lower() == name.lower():
            return w
    raise WitnessError(f"unknown witness {name!r}; known: {', '.join(w.name for w in witness_catalog())}")


def finite_sets(w: WitnessSpace, bound: int, size: int = 2) -> list[tuple]:
    pts = w.points(bound)
    return [c for k in range(1, size + 1) for c in combinations(pts, k)]
