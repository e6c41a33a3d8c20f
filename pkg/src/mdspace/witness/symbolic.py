"""Symbolic points, sets, directed sets, nets and ideals over countable carriers.

A carrier is a finite set of named points plus labelled copies of the
naturals ("chains").  Sets are finite sets plus, per chain, an optional
tail ``{k : k >= offset}``; that is enough for every open set, principal
up-set and directed set the catalogued witnesses need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Union


class WitnessError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Fin:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Chain:
    chain: str
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise WitnessError("chain index must be a natural number")

    def __str__(self) -> str:
        return str(self.k) if self.chain == "N" else f"{self.chain}{self.k}"


SymPoint = Union[Fin, Chain]


def _sort_key(p: SymPoint):
    return (0, p.chain, p.k, "") if isinstance(p, Chain) else (1, "", 0, p.name)


@dataclass(frozen=True)
class SymSet:
    """Finite part plus chain tails, kept in a canonical form."""

    fin: frozenset = frozenset()
    tails: tuple = ()  # sorted (chain, offset) pairs

    @classmethod
    def make(cls, fin: Iterable[SymPoint] = (), tails: dict[str, int] | None = None) -> "SymSet":
        fin = set(fin)
        tails = dict(tails or {})
        for ch in list(tails):
            t = tails[ch]
            while t > 0 and Chain(ch, t - 1) in fin:
                t -= 1
            tails[ch] = t
            fin = {p for p in fin if not (isinstance(p, Chain) and p.chain == ch and p.k >= t)}
        return cls(frozenset(fin), tuple(sorted(tails.items())))

    @property
    def tail_map(self) -> dict[str, int]:
        return dict(self.tails)

    def __contains__(self, p: SymPoint) -> bool:
        if p in self.fin:
            return True
        if isinstance(p, Chain):
            t = self.tail_map.get(p.chain)
            return t is not None and p.k >= t
        return False

    def is_empty(self) -> bool:
        return not self.fin and not self.tails

    def union(self, other: "SymSet") -> "SymSet":
        tails = self.tail_map
        for ch, t in other.tails:
            tails[ch] = min(t, tails.get(ch, t))
        return SymSet.make(self.fin | other.fin, tails)

    def meet(self, other: "SymSet") -> "SymSet":
        fin = {p for p in self.fin if p in other} | {p for p in other.fin if p in self}
        mine, theirs = self.tail_map, other.tail_map
        tails = {ch: max(t, theirs[ch]) for ch, t in mine.items() if ch in theirs}
        return SymSet.make(fin, tails)

    def meets(self, other: "SymSet") -> bool:
        if any(p in other for p in self.fin) or any(p in self for p in other.fin):
            return True
        mine = {ch for ch, _ in self.tails}
        return any(ch in mine for ch, _ in other.tails)

    def subset(self, other: "SymSet") -> bool:
        if any(p not in other for p in self.fin):
            return False
        theirs = other.tail_map
        return all(ch in theirs and theirs[ch] <= t for ch, t in self.tails)

    def constants(self) -> list[int]:
        return [p.k for p in self.fin if isinstance(p, Chain)] + [t for _, t in self.tails]

    def __str__(self) -> str:
        parts = [str(p) for p in sorted(self.fin, key=_sort_key)]
        parts += [f"{'' if ch == 'N' else ch}{t}.." for ch, t in self.tails]
        return "{" + ",".join(parts) + "}"


EMPTY = SymSet()


# directed sets ---------------------------------------------------------------

@dataclass(frozen=True)
class FiniteSet:
    points: tuple

    def symset(self) -> SymSet:
        return SymSet.make(self.points)

    def members(self, bound: int) -> list[SymPoint]:
        return list(self.points)

    def constants(self) -> list[int]:
        return [p.k for p in self.points if isinstance(p, Chain)]

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.points) + "}"


@dataclass(frozen=True)
class ChainTail:
    chain: str
    offset: int

    def symset(self) -> SymSet:
        return SymSet.make((), {self.chain: self.offset})

    def members(self, bound: int) -> list[SymPoint]:
        return [Chain(self.chain, k) for k in range(self.offset, max(bound, self.offset) + 1)]

    def constants(self) -> list[int]:
        return [self.offset]

    def __str__(self) -> str:
        return f"tail({self.chain},{self.offset})"


@dataclass(frozen=True)
class TailUnion:
    tail: ChainTail
    extra: tuple  # chain points of the same chain, below the tail

    def symset(self) -> SymSet:
        return SymSet.make(self.extra, {self.tail.chain: self.tail.offset})

    def members(self, bound: int) -> list[SymPoint]:
        return list(self.extra) + self.tail.members(bound)

    def constants(self) -> list[int]:
        return self.tail.constants() + [p.k for p in self.extra]

    def __str__(self) -> str:
        return f"{self.tail}+" + "{" + ",".join(str(p) for p in self.extra) + "}"


DirectedDescriptor = Union[FiniteSet, ChainTail, TailUnion]


# nets ------------------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    point: SymPoint

    def at(self, j: int) -> SymPoint:
        return self.point

    def __str__(self) -> str:
        return str(self.point)


@dataclass(frozen=True)
class ChainTerm:
    """``x_j = Chain(chain, j // m + c)``."""

    chain: str
    m: int
    c: int

    def __post_init__(self):
        if self.m < 1 or self.c < 0:
            raise WitnessError("chain term needs m >= 1 and c >= 0")

    def at(self, j: int) -> SymPoint:
        return Chain(self.chain, j // self.m + self.c)

    def __str__(self) -> str:
        return f"{'' if self.chain == 'N' else self.chain}[j/{self.m}+{self.c}]"


Term = Union[Const, ChainTerm]


@dataclass(frozen=True)
class NetDescriptor:
    """A net on the naturals: a finite prefix, then a block repeated forever."""

    prefix: tuple = ()
    block: tuple = field(default=())

    def __post_init__(self):
        if not self.block:
            raise WitnessError("net pattern needs a nonempty repeating block")

    def at(self, j: int) -> SymPoint:
        p = len(self.prefix)
        if j < p:
            return self.prefix[j].at(j)
        return self.block[(j - p) % len(self.block)].at(j)

    def constants(self) -> list[int]:
        out = []
        for t in self.prefix + self.block:
            if isinstance(t, ChainTerm):
                out.append(t.c)
            elif isinstance(t.point, Chain):
                out.append(t.point.k)
        return out

    def max_step(self) -> int:
        return max([t.m for t in self.prefix + self.block if isinstance(t, ChainTerm)], default=1)

    def defect(self, target: SymSet) -> "Defect":
        """``{j : x_j not in target}`` as a finite part plus an "infinite" flag.

        Past ``cut`` every block position is either constant or a chain term
        whose value exceeds every constant of ``target``, so membership no
        longer changes along each residue class.
        """
        p, l = len(self.prefix), len(self.block)
        top = max(target.constants(), default=0) + 1
        cut = p + l + self.max_step() * (top + 1) * l
        finite = frozenset(j for j in range(cut) if self.at(j) not in target)
        infinite = any(self.at(cut + r) not in target for r in range(l))
        return Defect(finite, infinite)

    def describe(self) -> str:
        pre = ",".join(str(t) for t in self.prefix)
        return f"{pre};{','.join(str(t) for t in self.block)}"


@dataclass(frozen=True)
class Defect:
    finite: frozenset
    infinite: bool


# ideals ----------------------------------------------------------------------

@dataclass(frozen=True)
class IdealDescriptor:
    """``I0`` (finite sets), ``FiniteGenerated`` (subsets of a finite union) or ``PowerSet``."""

    kind: str
    generators: tuple = ()

    def __post_init__(self):
        if self.kind not in ("I0", "FiniteGenerated", "PowerSet"):
            raise WitnessError(f"unknown ideal kind {self.kind!r}")

    @property
    def proper(self) -> bool:
        return self.kind != "PowerSet"

    def top(self) -> frozenset:
        out = set()
        for g in self.generators:
            out |= set(g)
        return frozenset(out)

    def contains(self, d: Defect) -> bool:
        if self.kind == "PowerSet":
            return True
        if d.infinite:
            return False
        return self.kind == "I0" or d.finite <= self.top()

    def constants(self) -> list[int]:
        return list(self.top())

    def describe(self) -> str:
        if self.kind == "I0":
            return "i0"
        if self.kind == "PowerSet":
            return "powerset"
        return "gen:" + ";".join("[" + ",".join(map(str, sorted(g))) + "]" for g in self.generators)


I0 = IdealDescriptor("I0")


# parsing ---------------------------------------------------------------------

def parse_point(text: str) -> SymPoint:
    """``5`` (the chain N), ``N5`` style labelled chain points, or a finite name."""
    text = text.strip()
    if not text:
        raise WitnessError("empty point")
    if text.isdigit():
        return Chain("N", int(text))
    m = re.fullmatch(r"([A-Z])(\d+)", text)
    if m:
        return Chain(m.group(1), int(m.group(2)))
    if text in ("∞", "infinity"):
        return Fin("inf")
    return Fin(text)


def _parse_term(text: str) -> Term:
    m = re.fullmatch(r"\s*([A-Z]?)\[j/(\d+)\+(\d+)\]\s*", text)
    if m:
        return ChainTerm(m.group(1) or "N", int(m.group(2)), int(m.group(3)))
    return Const(parse_point(text))


def parse_net(text: str) -> NetDescriptor:
    """``alt:p`` (x_2n = n, x_2n+1 = p), ``const:p``, ``chain`` (x_j = j), or
    ``PREFIX;BLOCK`` with comma separated terms, a term being a point or ``[j/m+c]``."""
    text = text.strip()
    if text.startswith("alt:"):
        return NetDescriptor((), (ChainTerm("N", 2, 0), Const(parse_point(text[4:]))))
    if text.startswith("const:"):
        return NetDescriptor((), (Const(parse_point(text[6:])),))
    if text == "chain":
        return NetDescriptor((), (ChainTerm("N", 1, 0),))
    if ";" not in text:
        raise WitnessError(f"cannot parse net {text!r}")
    pre, block = text.split(";", 1)
    terms = lambda s: tuple(_parse_term(t) for t in s.split(",") if t.strip())
    return NetDescriptor(terms(pre), terms(block))


def parse_ideal(text: str) -> IdealDescriptor:
    text = text.strip()
    if text == "i0":
        return I0
    if text == "powerset":
        return IdealDescriptor("PowerSet")
    if text == "trivial":
        return IdealDescriptor("FiniteGenerated", ())
    if text.startswith("gen:"):
        gens = []
        for chunk in text[4:].split(";"):
            inner = chunk.strip().strip("[]")
            try:
                gens.append(tuple(sorted(int(t) for t in inner.split(",") if t.strip())))
            except ValueError as exc:
                raise WitnessError(f"bad generator {chunk!r}") from exc
        return IdealDescriptor("FiniteGenerated", tuple(gens))
    raise WitnessError(f"unknown ideal {text!r}")
