"""Finite posets on the points ``0..n-1`` and point sets encoded as bitmasks.

A point set is a plain ``int``: bit ``i`` is set iff point ``i`` belongs to
the set.  All order-theoretic helpers here work on that encoding.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 24


class PosetError(ValueError):
    """Raised when a relation is not a partial order."""


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def to_list(mask: int) -> list[int]:
    return list(bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0), in increasing numeric order."""
    members = to_list(mask)
    for choice in range(1 << len(members)):
        yield to_mask(members[i] for i in range(len(members)) if choice >> i & 1)


class FinitePoset:
    """An immutable partial order on ``range(n)``.

    ``leq[i][j]`` is True iff ``i <= j``.  The constructor checks reflexivity,
    antisymmetry and transitivity and raises :class:`PosetError` otherwise.
    """

    __slots__ = ("n", "leq", "up", "down", "__dict__")

    def __init__(self, leq: Sequence[Sequence[bool]]):
        n = len(leq)
        if n > MAX_POINTS:
            raise PosetError(f"at most {MAX_POINTS} points supported, got {n}")
        rows = tuple(tuple(bool(v) for v in row) for row in leq)
        if any(len(row) != n for row in rows):
            raise PosetError("order relation must be square")
        for i in range(n):
            if not rows[i][i]:
                raise PosetError(f"not reflexive at {i}")
        for i in range(n):
            for j in range(n):
                if i != j and rows[i][j] and rows[j][i]:
                    raise PosetError(f"antisymmetry fails: {i} <= {j} <= {i}")
        for i, j, k in product(range(n), repeat=3):
            if rows[i][j] and rows[j][k] and not rows[i][k]:
                raise PosetError(f"transitivity fails: {i} <= {j} <= {k}")
        self.n = n
        self.leq = rows
        self.up = tuple(to_mask(j for j in range(n) if rows[i][j]) for i in range(n))
        self.down = tuple(to_mask(j for j in range(n) if rows[j][i]) for i in range(n))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "FinitePoset":
        """Reflexive-transitive closure of ``pairs``; cycles are rejected."""
        if n < 0 or n > MAX_POINTS:
            raise PosetError(f"point count must be in 0..{MAX_POINTS}, got {n}")
        rel = [[i == j for j in range(n)] for i in range(n)]
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise PosetError(f"pair ({i}, {j}) outside 0..{n - 1}")
            rel[i][j] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if rel[i][j] and rel[j][i]:
                    raise PosetError(f"cycle between distinct points {i} and {j}")
        return cls(rel)

    @classmethod
    def discrete(cls, n: int) -> "FinitePoset":
        return cls.from_pairs(n, [])

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls.from_pairs(n, [(i, i + 1) for i in range(n - 1)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinitePoset) and self.leq == other.leq

    def __hash__(self) -> int:
        return hash(self.leq)

    def __repr__(self) -> str:
        return f"FinitePoset(n={self.n}, covers={self.covers()})"

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(i, j)`` with ``j`` covering ``i``."""
        out = []
        for i in range(self.n):
            for j in bits(self.up[i] & ~(1 << i)):
                between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    out.append((i, j))
        return out

    def up_set(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def down_set(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def is_upper(self, mask: int) -> bool:
        return self.up_set(mask) == mask

    def is_lower(self, mask: int) -> bool:
        return self.down_set(mask) == mask

    def is_directed(self, mask: int) -> bool:
        """Nonempty and every pair has an upper bound inside ``mask``."""
        if not mask:
            return False
        members = to_list(mask)
        for a, i in enumerate(members):
            for j in members[a + 1:]:
                if not self.up[i] & self.up[j] & mask:
                    return False
        return True

    def greatest(self, mask: int) -> int | None:
        """The greatest element of ``mask`` or None."""
        for i in bits(mask):
            if self.down[i] & mask == mask:
                return i
        return None

    def sup(self, mask: int) -> int | None:
        """Least upper bound of ``mask`` in the whole poset, if it exists."""
        ub = self.full
        for i in bits(mask):
            ub &= self.up[i]
        for u in bits(ub):
            if self.up[u] & ub == ub:
                return u
        return None

    @cached_property
    def directed_subsets(self) -> tuple[int, ...]:
        """Every nonempty directed subset, ascending by mask value."""
        return tuple(m for m in range(1, 1 << self.n) if self.is_directed(m))

    @cached_property
    def upper_sets(self) -> tuple[int, ...]:
        return tuple(m for m in range(1 << self.n) if self.is_upper(m))

    @cached_property
    def lower_sets(self) -> tuple[int, ...]:
        return tuple(m for m in range(1 << self.n) if self.is_lower(m))

    def to_dsl(self) -> str:
        lines = [f"poset {self.n}"]
        lines += [f"le {i} {j}" for i, j in self.covers()]
        return "\n".join(lines) + "\n"


def smyth_le(poset: FinitePoset, g: int, h: int) -> bool:
    """Smyth preorder: ``G <= H`` iff ``H`` lies inside the up-closure of ``G``."""
    return h & ~poset.up_set(g) == 0


def is_smyth_directed(poset: FinitePoset, family: Sequence[int]) -> bool:
    """Nonempty family where any two members have a member below both (Smyth)."""
    if not family:
        return False
    ups = [poset.up_set(f) for f in family]
    for a in range(len(family)):
        for b in range(a, len(family)):
            bound = ups[a] & ups[b]
            if not any(f & ~bound == 0 for f in family):
                return False
    return True


def enumerate_posets(n: int) -> Iterator[FinitePoset]:
    """All labeled partial orders on ``n`` points, each exactly once.

    A poset on ``0..n-1`` restricts to a unique poset on ``0..n-2``; the new
    point is placed by choosing a lower set strictly below it and an upper set
    strictly above it with every member of the first below every member of the
    second.  Output order is the recursion order, which is canonical.
    """
    if not 1 <= n <= 6:
        raise PosetError(f"enumeration supports 1 <= n <= 6, got {n}")
    for up in _extend(n):
        rel = [[bool(up[i] >> j & 1) for j in range(n)] for i in range(n)]
        yield FinitePoset(rel)


def _extend(n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (1,)
        return
    k = n - 1
    new = 1 << k
    for up in _extend(k):
        down = tuple(to_mask(j for j in range(k) if up[j] >> i & 1) for i in range(k))
        lowers = [m for m in range(1 << k) if all(down[i] & ~m == 0 for i in bits(m))]
        uppers = [m for m in range(1 << k) if all(up[i] & ~m == 0 for i in bits(m))]
        for below in lowers:
            for above in uppers:
                if below & above:
                    continue
                if any(above & ~up[i] for i in bits(below)):
                    continue
                ext = [up[i] | (new if below >> i & 1 else 0) for i in range(k)]
                ext.append(new | above)
                yield tuple(ext)


def brute_force_poset_count(n: int) -> int:
    """Count partial orders on ``n`` points by testing every candidate relation."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    count = 0
    for choice in range(1 << len(off)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for b, (i, j) in enumerate(off):
            if choice >> b & 1:
                rel[i][j] = True
        try:
            FinitePoset(rel)
        except PosetError:
            continue
        count += 1
    return count
