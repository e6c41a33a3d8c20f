"""Finite T0 spaces and the definitional operators computed on them.

Every operator below is evaluated from its definition: convergence of a
directed set is tested against the open family, the d-way-below relation
quantifies over all directed subsets, and so on.  The closed forms that hold
on finite spaces (every finite T0 topology is Alexandroff) are used only by
the test-suite and the collapse checks, never inside these functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .poset import FinitePoset, PosetError, bits, to_list, to_mask


class SpaceError(ValueError):
    """Invalid finite space or invalid input to a space operation."""


class DSLError(ValueError):
    """Malformed space description text."""


def _fmt(mask: int) -> str:
    return "{" + ",".join(str(i) for i in bits(mask)) + "}"


# topologies are validated against every subset of the carrier
MAX_SPACE_POINTS = 16


class FiniteSpace:
    """A finite T0 space: a poset together with its open family.

    The constructor enforces that ``opens`` is a topology, that it is T0,
    that its specialization order is ``poset`` and that it consists of exactly
    the upper sets of ``poset``.
    """

    def __init__(self, poset: FinitePoset, opens: Iterable[int]):
        if poset.n > MAX_SPACE_POINTS:
            raise SpaceError(f"spaces are limited to {MAX_SPACE_POINTS} points, got {poset.n}")
        self.poset = poset
        self.n = poset.n
        self.full = (1 << self.n) - 1
        family = frozenset(opens)
        _check_topology(self.n, family)
        _check_t0(self.n, family)
        spec = _specialization_rows(self.n, family)
        if tuple(tuple(r) for r in spec) != poset.leq:
            raise SpaceError("specialization order of the opens differs from the given order")
        upper = frozenset(poset.upper_sets)
        missing = sorted(upper - family)
        if missing:
            raise SpaceError(f"upper set {_fmt(missing[0])} is not open")
        extra = sorted(family - upper)
        if extra:
            raise SpaceError(f"open set {_fmt(extra[0])} is not an upper set")
        self.opens = tuple(sorted(family))
        self._open_set = family

    @classmethod
    def alexandroff(cls, poset: FinitePoset) -> "FiniteSpace":
        return cls(poset, poset.upper_sets)

    @classmethod
    def from_opens(cls, n: int, opens: Iterable[int]) -> "FiniteSpace":
        family = frozenset(opens)
        if any(o >> n for o in family):
            raise SpaceError(f"open set mentions a point outside 0..{n - 1}")
        _check_topology(n, family)
        _check_t0(n, family)
        try:
            poset = FinitePoset(_specialization_rows(n, family))
        except PosetError as exc:  # unreachable once T0 holds
            raise SpaceError(str(exc)) from exc
        return cls(poset, family)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteSpace) and self.opens == other.opens and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.n, self.opens))

    def __repr__(self) -> str:
        return f"FiniteSpace(n={self.n}, opens={[_fmt(o) for o in self.opens]})"

    def is_open(self, mask: int) -> bool:
        return mask in self._open_set

    def to_dsl(self, form: str = "poset") -> str:
        if form == "poset":
            return self.poset.to_dsl()
        lines = [f"space {self.n}"]
        for o in self.opens:
            lines.append(" ".join(["open"] + [str(i) for i in bits(o)]))
        return "\n".join(lines) + "\n"

    # cached tables used by the operators -------------------------------

    @cached_property
    def directed(self) -> tuple[int, ...]:
        return self.poset.directed_subsets

    @cached_property
    def limits(self) -> dict[int, int]:
        """Directed set -> mask of points it converges to (via the opens)."""
        table = {}
        for d in self.directed:
            missed = 0
            for u in self.opens:
                if not u & d:
                    missed |= u
            table[d] = self.full & ~missed
        return table

    @cached_property
    def upper_bounds(self) -> dict[int, int]:
        """Directed set -> points above every member."""
        table = {}
        for d in self.directed:
            ub = self.full
            for i in bits(d):
                ub &= self.poset.up[i]
            table[d] = ub
        return table

    @cached_property
    def way_below_down(self) -> tuple[int, ...]:
        """``way_below_down[y]`` = points d-way-below ``y``."""
        out = []
        for y in range(self.n):
            mask = 0
            for x in range(self.n):
                if _wb(self, x, y):
                    mask |= 1 << x
            out.append(mask)
        return tuple(out)

    @cached_property
    def way_below_up(self) -> tuple[int, ...]:
        """``way_below_up[x]`` = points ``y`` with ``x`` d-way-below ``y``."""
        return tuple(
            to_mask(y for y in range(self.n) if self.way_below_down[y] >> x & 1)
            for x in range(self.n)
        )

    @cached_property
    def interior_up(self) -> tuple[int, ...]:
        return tuple(interior(self, self.poset.up[x]) for x in range(self.n))


def _check_topology(n: int, family: frozenset[int]) -> None:
    full = (1 << n) - 1
    if 0 not in family:
        raise SpaceError("empty set must be open")
    if full not in family:
        raise SpaceError("whole carrier must be open")
    members = sorted(family)
    for a in members:
        for b in members:
            if a | b not in family:
                raise SpaceError(f"union of {_fmt(a)} and {_fmt(b)} is not open")
            if a & b not in family:
                raise SpaceError(f"intersection of {_fmt(a)} and {_fmt(b)} is not open")


def _check_t0(n: int, family: frozenset[int]) -> None:
    signature = {}
    for p in range(n):
        key = tuple(o >> p & 1 for o in sorted(family))
        if key in signature:
            raise SpaceError(f"not T0: points {signature[key]} and {p} have the same neighbourhoods")
        signature[key] = p


def _specialization_rows(n: int, family: frozenset[int]) -> list[list[bool]]:
    # x <= y iff x in cl{y} iff every open containing x contains y
    return [[all(o >> y & 1 for o in family if o >> x & 1) for y in range(n)] for x in range(n)]


# ---------------------------------------------------------------------------
# DSL

def load_space(text: str) -> FiniteSpace:
    """Parse the line-oriented ``poset``/``space`` description format."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if not lines:
        raise DSLError("empty description")
    lineno, head = lines[0]
    if len(head) != 2 or head[0] not in ("poset", "space"):
        raise DSLError(f"line {lineno}: expected 'poset <n>' or 'space <n>'")
    n = _int(head[1], lineno)
    if not 0 <= n <= 16:
        raise DSLError(f"line {lineno}: point count must be in 0..16")
    body = lines[1:]
    if head[0] == "poset":
        pairs = []
        for lineno, toks in body:
            if toks[0] != "le" or len(toks) != 3:
                raise DSLError(f"line {lineno}: expected 'le <i> <j>'")
            pairs.append((_point(toks[1], n, lineno), _point(toks[2], n, lineno)))
        try:
            poset = FinitePoset.from_pairs(n, pairs)
        except PosetError as exc:
            raise SpaceError(str(exc)) from exc
        return FiniteSpace.alexandroff(poset)
    opens = set()
    for lineno, toks in body:
        if toks[0] != "open":
            raise DSLError(f"line {lineno}: expected 'open <i> ...'")
        opens.add(to_mask(_point(t, n, lineno) for t in toks[1:]))
    return FiniteSpace.from_opens(n, opens)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise DSLError(f"line {lineno}: '{tok}' is not an integer") from None


def _point(tok: str, n: int, lineno: int) -> int:
    p = _int(tok, lineno)
    if not 0 <= p < n:
        raise DSLError(f"line {lineno}: point {p} outside 0..{n - 1}")
    return p


def parse_set(text: str, n: int | None = None) -> int:
    """``"0,2"`` -> mask; empty text is the empty set."""
    text = text.strip().strip("{}[]")
    if not text:
        return 0
    pts = [int(t) for t in text.replace(" ", "").split(",") if t]
    if n is not None and any(not 0 <= p < n for p in pts):
        raise SpaceError(f"set {text!r} mentions a point outside 0..{n - 1}")
    return to_mask(pts)


# ---------------------------------------------------------------------------
# basic topology

def specialization(space: FiniteSpace) -> FinitePoset:
    """Order recomputed from closures of singletons: x <= y iff x in cl{y}."""
    n = space.n
    rows = [[bool(closure(space, 1 << y) >> x & 1) for y in range(n)] for x in range(n)]
    return FinitePoset(rows)


def interior(space: FiniteSpace, mask: int) -> int:
    out = 0
    for u in space.opens:
        if u & ~mask == 0:
            out |= u
    return out


def closure(space: FiniteSpace, mask: int) -> int:
    """Points all of whose open neighbourhoods meet ``mask``."""
    out = 0
    for x in range(space.n):
        if all(u & mask for u in space.opens if u >> x & 1):
            out |= 1 << x
    return out


def converges(space: FiniteSpace, d: int, x: int) -> bool:
    """Directed set ``d`` converges to ``x``: every open around ``x`` meets ``d``."""
    if not d:
        raise SpaceError("directed set must be nonempty")
    if d & ~space.full:
        raise SpaceError("set mentions points outside the carrier")
    if not space.poset.is_directed(d):
        raise SpaceError(f"{_fmt(d)} is not directed")
    _check_point(space, x)
    return bool(space.limits[d] >> x & 1)


def _check_point(space: FiniteSpace, x: int) -> None:
    if not 0 <= x < space.n:
        raise SpaceError(f"point {x} outside 0..{space.n - 1}")


def md_opens(space: FiniteSpace) -> tuple[int, ...]:
    """Monotone determined open sets: every directed set converging into ``U`` meets ``U``."""
    limits = space.limits
    return tuple(
        u for u in range(space.full + 1)
        if all(u & d for d, lim in limits.items() if u & lim)
    )


def is_monotone_determined(space: FiniteSpace) -> bool:
    return set(md_opens(space)) == set(space.opens)


def generate_topology(n: int, subbasis: Iterable[int]) -> tuple[int, ...]:
    """Smallest topology on ``0..n-1`` containing ``subbasis``."""
    full = (1 << n) - 1
    basis = {full} | set(subbasis)
    changed = True
    while changed:
        changed = False
        for a in list(basis):
            for b in list(basis):
                if a & b not in basis:
                    basis.add(a & b)
                    changed = True
    opens = {0}
    for b in basis:
        opens |= {o | b for o in opens}
    return tuple(sorted(opens))


def omega(space: FiniteSpace) -> tuple[int, ...]:
    """Lower topology: generated by complements of principal upper sets."""
    return generate_topology(space.n, [space.full & ~space.poset.up[x] for x in range(space.n)])


def lawson(space: FiniteSpace) -> tuple[int, ...]:
    """Join of the space topology and the lower topology."""
    return generate_topology(space.n, list(space.opens) + list(omega(space)))


# ---------------------------------------------------------------------------
# d-way-below and friends

def _wb(space: FiniteSpace, x: int, y: int) -> bool:
    upx = space.poset.up[x]
    return all(d & upx for d, lim in space.limits.items() if lim >> y & 1)


def way_below_d(space: FiniteSpace, x: int, y: int) -> bool:
    """Every directed set converging to ``y`` has a member above ``x``."""
    _check_point(space, x)
    _check_point(space, y)
    return _wb(space, x, y)


def set_way_below_d(space: FiniteSpace, g: int, h: int) -> bool:
    """Every directed set converging to a point of ``h`` meets the up-closure of ``g``."""
    if not g or not h:
        raise SpaceError("both sets must be nonempty")
    if (g | h) & ~space.full:
        raise SpaceError("set mentions points outside the carrier")
    upg = space.poset.up_set(g)
    return all(d & upg for d, lim in space.limits.items() if lim & h)


def upper_way_below(space: FiniteSpace, f: int) -> int:
    """Points ``x`` with ``f`` d-approximating ``{x}``."""
    return to_mask(x for x in range(space.n) if set_way_below_d(space, f, 1 << x))


@dataclass(frozen=True)
class Neighborhoods:
    point: int
    way_below: int          # points d-way-below the point
    way_above: int          # points the point is d-way-below
    fin: tuple[int, ...]    # nonempty F with F d-approximating the point
    interior_up: int
    compact: bool

    def as_dict(self) -> dict:
        return {
            "point": self.point,
            "way_below": to_list(self.way_below),
            "way_above": to_list(self.way_above),
            "fin": [to_list(f) for f in self.fin],
            "interior_up": to_list(self.interior_up),
            "compact": self.compact,
        }


def fin_d(space: FiniteSpace, x: int) -> tuple[int, ...]:
    return tuple(f for f in range(1, space.full + 1) if set_way_below_d(space, f, 1 << x))


def neighborhoods(space: FiniteSpace, x: int) -> Neighborhoods:
    _check_point(space, x)
    return Neighborhoods(
        point=x,
        way_below=space.way_below_down[x],
        way_above=space.way_below_up[x],
        fin=fin_d(space, x),
        interior_up=interior(space, space.poset.up[x]),
        compact=bool(space.way_below_down[x] >> x & 1),
    )


# ---------------------------------------------------------------------------
# approximation operators

def lower_approx(space: FiniteSpace, a: int) -> int:
    """Members of ``a`` having some member of ``a`` d-way-below them."""
    return to_mask(x for x in bits(a) if space.way_below_down[x] & a)


def upper_approx(space: FiniteSpace, a: int) -> int:
    """Points all of whose d-way-below points lie in the down-closure of ``a``."""
    da = space.poset.down_set(a)
    return to_mask(x for x in range(space.n) if space.way_below_down[x] & ~da == 0)


def tilde(space: FiniteSpace, a: int) -> int:
    """Limits of directed sets inside down(a) that are also below the limit."""
    da = space.poset.down_set(a)
    out = 0
    for d, lim in space.limits.items():
        if d & ~da == 0:
            out |= lim & space.upper_bounds[d]
    return out


def hat(space: FiniteSpace, a: int) -> int:
    """Limits of directed sets inside down(a)."""
    da = space.poset.down_set(a)
    out = 0
    for d, lim in space.limits.items():
        if d & ~da == 0:
            out |= lim
    return out


@dataclass(frozen=True)
class ClosureSuite:
    a: int
    up: int
    down: int
    closure: int
    interior: int
    lower_approx: int
    upper_approx: int
    tilde: int
    hat: int
    names: tuple[str, ...] = field(
        default=("up", "down", "closure", "interior", "lower_approx", "upper_approx", "tilde", "hat"),
        repr=False,
    )

    def as_dict(self) -> dict[str, list[int]]:
        return {name: to_list(getattr(self, name)) for name in self.names}


def closure_suite(space: FiniteSpace, a: int) -> ClosureSuite:
    if a & ~space.full:
        raise SpaceError("set mentions points outside the carrier")
    return ClosureSuite(
        a=a,
        up=space.poset.up_set(a),
        down=space.poset.down_set(a),
        closure=closure(space, a),
        interior=interior(space, a),
        lower_approx=lower_approx(space, a),
        upper_approx=upper_approx(space, a),
        tilde=tilde(space, a),
        hat=hat(space, a),
    )


def sierpinski() -> FiniteSpace:
    return FiniteSpace.alexandroff(FinitePoset.chain(2))


def discrete(n: int) -> FiniteSpace:
    return FiniteSpace.alexandroff(FinitePoset.discrete(n))


def chain(n: int) -> FiniteSpace:
    return FiniteSpace.alexandroff(FinitePoset.chain(n))


__all__ = [
    "ClosureSuite", "DSLError", "FiniteSpace", "Neighborhoods", "SpaceError",
    "chain", "closure", "closure_suite", "converges", "discrete", "fin_d",
    "generate_topology", "hat", "interior", "is_monotone_determined", "lawson",
    "load_space", "lower_approx", "md_opens", "neighborhoods", "omega",
    "parse_set", "set_way_below_d", "sierpinski", "specialization",
    "tilde", "upper_approx", "upper_way_below", "way_below_d",
]
