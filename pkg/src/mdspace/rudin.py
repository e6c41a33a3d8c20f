"""Directed transversals of Smyth-directed families of finite sets."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .poset import FinitePoset, bits, is_smyth_directed, to_list, to_mask


class RudinError(ValueError):
    pass


def parse_family(text: str, n: int | None = None) -> list[int]:
    """``"[0];[0,1]"`` -> list of masks."""
    family = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        inner = chunk.strip("[]{} ")
        pts = [int(t) for t in inner.split(",") if t.strip()]
        if n is not None and any(not 0 <= p < n for p in pts):
            raise RudinError(f"member {chunk} mentions a point outside 0..{n - 1}")
        family.append(to_mask(pts))
    return family


def is_transversal(poset: FinitePoset, family: Sequence[int], d: int) -> bool:
    """Independent validity check: ``d`` is directed, inside the union, and meets every member."""
    union = 0
    for f in family:
        union |= f
    if not d or d & ~union:
        return False
    members = to_list(d)
    for i in members:
        for j in members:
            if not any(poset.le(i, k) and poset.le(j, k) for k in members):
                return False
    return all(f & d for f in family)


def rudin_transversal(poset: FinitePoset, family: Sequence[int]) -> int:
    """Smallest directed set inside the union of ``family`` meeting every member.

    Ties among minimum-size answers go to the lexicographically least sorted
    tuple of points.  Raises :class:`RudinError` on an empty family, an empty
    member, or a family that is not directed in the Smyth preorder.
    """
    if not family:
        raise RudinError("family must be nonempty")
    if any(f == 0 for f in family):
        raise RudinError("family members must be nonempty")
    if any(f >> poset.n for f in family):
        raise RudinError("family mentions points outside the poset")
    if not is_smyth_directed(poset, family):
        raise RudinError("family is not directed in the Smyth preorder")
    union = 0
    for f in family:
        union |= f
    pts = to_list(union)
    for size in range(1, len(pts) + 1):
        for combo in combinations(pts, size):
            d = to_mask(combo)
            if all(f & d for f in family) and poset.is_directed(d):
                return d
    # a finite Smyth-directed family always has a transversal
    raise AssertionError("no directed transversal found")


def constructive_transversal(poset: FinitePoset, family: Sequence[int]) -> int:
    """A (not necessarily minimal) transversal built the textbook way.

    Pick a member lying in the up-closure of every other member, take any of
    its points ``y``, and add for each member a point of it below ``y``.
    """
    least = next(
        f for f in family
        if all(f & ~poset.up_set(g) == 0 for g in family)
    )
    y = next(bits(least))
    d = 1 << y
    for f in family:
        d |= 1 << next(bits(f & poset.down[y]))
    return d
