"""Finite topological spaces over bitmask point sets.

A point set on the carrier ``{0, ..., n-1}`` is an ``int`` whose bit ``x`` is
set iff ``x`` belongs to it.  ``PointSet`` wraps such a mask together with the
carrier size for the public API; the hot paths work on raw masks.

Opens of a ``FiniteTopology`` are kept sorted ascending as unsigned integers,
so two topologies are equal iff their dataclasses compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    CarrierMismatch,
    GuardExceeded,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
)

DEFAULT_MAX_N = 7
FIP_GUARD = 16


def full_mask(n: int) -> int:
    return (1 << n) - 1


def points_of(mask: int) -> Iterator[int]:
    x = 0
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for x in points:
        m |= 1 << x
    return m


@dataclass(frozen=True)
class PointSet:
    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits & ~full_mask(self.n):
            raise CarrierMismatch(f"mask {self.bits:#b} exceeds carrier of size {self.n}")

    @classmethod
    def of(cls, n: int, points: Iterable[int]) -> PointSet:
        return cls(mask_of(points), n)

    def points(self) -> tuple[int, ...]:
        return tuple(points_of(self.bits))

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self):
        return points_of(self.bits)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.points())) + "}"


SetLike = Union[PointSet, int]


def _mask(n: int, A: SetLike) -> int:
    if isinstance(A, PointSet):
        if A.n != n:
            raise CarrierMismatch(f"set lives on {A.n} points, expected {n}")
        return A.bits
    if A < 0 or A & ~full_mask(n):
        raise CarrierMismatch(f"mask {A:#b} exceeds carrier of size {n}")
    return A


@dataclass(frozen=True)
class FiniteTopology:
    """A topology on ``{0..n-1}``; ``opens`` is sorted and duplicate-free.

    Build instances through :func:`validate_topology` (or the named
    constructors) unless the family is already known to be canonical.
    """

    n: int
    opens: tuple[int, ...]

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def closed_sets(self) -> tuple[int, ...]:
        f = self.full
        return tuple(sorted(f ^ u for u in self.opens))

    def open_sets(self) -> list[PointSet]:
        return [PointSet(u, self.n) for u in self.opens]

    def is_open(self, A: SetLike) -> bool:
        return _mask(self.n, A) in self.opens

    def to_json(self) -> dict:
        return {"n": self.n, "opens": [list(points_of(u)) for u in self.opens]}

    @classmethod
    def from_json(cls, obj: dict) -> FiniteTopology:
        n = int(obj["n"])
        return validate_topology(n, [mask_of(pts) for pts in obj["opens"]])

    def __repr__(self) -> str:
        body = ", ".join(repr(PointSet(u, self.n)) for u in self.opens)
        return f"FiniteTopology(n={self.n}, opens=[{body}])"


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation; ``rows[x]`` is the mask of ``{y : x <= y}``."""

    n: int
    rows: tuple[int, ...]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    @property
    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(self.leq(x, y) for y in range(self.n)) for x in range(self.n))

    @property
    def cols(self) -> tuple[int, ...]:
        """``cols[y]`` is the mask of ``{x : x <= y}``."""
        out = [0] * self.n
        for x, row in enumerate(self.rows):
            for y in points_of(row):
                out[y] |= 1 << x
        return tuple(out)

    def is_valid(self) -> bool:
        if len(self.rows) != self.n:
            return False
        for x, row in enumerate(self.rows):
            if not row >> x & 1 or row & ~full_mask(self.n):
                return False
            for y in points_of(row):
                if self.rows[y] & ~row:
                    return False
        return True

    def is_symmetric(self) -> bool:
        return self.rows == self.cols

    @classmethod
    def from_matrix(cls, leq: Sequence[Sequence[bool]]) -> Preorder:
        n = len(leq)
        P = cls(n, tuple(mask_of(y for y in range(n) if leq[x][y]) for x in range(n)))
        if not P.is_valid():
            raise ValueError("relation is not reflexive and transitive")
        return P

    @classmethod
    def generated_by(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Preorder:
        """Reflexive-transitive closure of the pairs ``x <= y``."""
        rows = [1 << x for x in range(n)]
        for x, y in pairs:
            rows[x] |= 1 << y
        changed = True
        while changed:
            changed = False
            for x in range(n):
                new = rows[x]
                for y in points_of(rows[x]):
                    new |= rows[y]
                if new != rows[x]:
                    rows[x] = new
                    changed = True
        return cls(n, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> Preorder:
        return cls(n, tuple(1 << x for x in range(n)))

    @classmethod
    def full(cls, n: int) -> Preorder:
        return cls(n, (full_mask(n),) * n)


@dataclass(frozen=True)
class SetFamily:
    n: int
    members: tuple[int, ...]

    @classmethod
    def of(cls, n: int, sets: Iterable[SetLike]) -> SetFamily:
        return cls(n, tuple(sorted({_mask(n, s) for s in sets})))

    def __contains__(self, A: SetLike) -> bool:
        return _mask(self.n, A) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def issubset(self, other: SetFamily) -> bool:
        return set(self.members) <= set(other.members)


# -- construction ----------------------------------------------------------


def validate_topology(n: int, opens: Iterable[SetLike]) -> FiniteTopology:
    fam = sorted({_mask(n, u) for u in opens})
    present = set(fam)
    if 0 not in present or full_mask(n) not in present:
        raise MissingEmptyOrFull(f"family on {n} points lacks the empty set or the carrier")
    for a, b in combinations(fam, 2):
        if a | b not in present:
            raise NotClosedUnderUnion(PointSet(a, n), PointSet(b, n))
        if a & b not in present:
            raise NotClosedUnderIntersection(PointSet(a, n), PointSet(b, n))
    return FiniteTopology(n, tuple(fam))


def discrete(n: int) -> FiniteTopology:
    return FiniteTopology(n, tuple(range(1 << n)))


def indiscrete(n: int) -> FiniteTopology:
    return FiniteTopology(n, tuple(sorted({0, full_mask(n)})))


def sierpinski() -> FiniteTopology:
    """Two points, opens ``{}, {0}, {0,1}``: the point 0 is open, 1 is closed."""
    return FiniteTopology(2, (0b00, 0b01, 0b11))


def _pairwise_fixpoint(family: set[int]) -> set[int]:
    fam = set(family)
    while True:
        grown = {a | b for a in fam for b in fam}
        grown |= {a & b for a in grown for b in grown}
        if grown == fam:
            return fam
        fam = grown


def topology_from_closed_base(n: int, base: SetFamily | Iterable[SetLike]) -> FiniteTopology:
    """Topology whose closed sets are generated by ``base``.

    Empty unions give the empty set and empty intersections the carrier, so any
    family (including the empty one) generates a topology.
    """
    members = base.members if isinstance(base, SetFamily) else [_mask(n, b) for b in base]
    f = full_mask(n)
    closed = _pairwise_fixpoint(set(members) | {0, f})
    return FiniteTopology(n, tuple(sorted(f ^ c for c in closed)))


def alexandrov_from_preorder(P: Preorder) -> FiniteTopology:
    opens = {0}
    for row in P.rows:
        opens |= {u | row for u in opens}
    return FiniteTopology(P.n, tuple(sorted(opens)))


def relabel(T: FiniteTopology, perm: Sequence[int]) -> FiniteTopology:
    """Image of ``T`` under the bijection ``x -> perm[x]``."""
    table = _perm_table(T.n, perm)
    return FiniteTopology(T.n, tuple(sorted(table[u] for u in T.opens)))


def _perm_table(n: int, perm: Sequence[int]) -> list[int]:
    table = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        table[m] = table[m ^ low] | 1 << perm[low.bit_length() - 1]
    return table


# -- closure, specialization, saturation ---------------------------------------


def closure(T: FiniteTopology, A: SetLike) -> PointSet:
    a = _mask(T.n, A)
    out = T.full
    for c in T.closed_sets:
        if a & ~c == 0:
            out &= c
    return PointSet(out, T.n)


def specialization(T: FiniteTopology) -> Preorder:
    rows = [0] * T.n
    for y in range(T.n):
        for x in points_of(closure(T, 1 << y).bits):
            rows[x] |= 1 << y
    return Preorder(T.n, tuple(rows))


def opposite(P: Preorder) -> Preorder:
    return Preorder(P.n, P.cols)


def up_set(P: Preorder, A: SetLike) -> PointSet:
    out = 0
    for y in points_of(_mask(P.n, A)):
        out |= P.rows[y]
    return PointSet(out, P.n)


def down_set(P: Preorder, A: SetLike) -> PointSet:
    return up_set(opposite(P), A)


def saturation(T: FiniteTopology, A: SetLike) -> PointSet:
    """Intersection of all opens containing ``A``."""
    a = _mask(T.n, A)
    out = T.full
    for u in T.opens:
        if a & ~u == 0:
            out &= u
    return PointSet(out, T.n)


def is_saturated(T: FiniteTopology, A: SetLike) -> bool:
    return saturation(T, A).bits == _mask(T.n, A)


# -- compactness -------------------------------------------------------------


def is_compact_cover(T: FiniteTopology, S: SetLike, guard: int = FIP_GUARD) -> bool:
    """Every open cover of ``S`` has a finite subcover, checked cover by cover.

    Covers are enumerated through their traces on ``S`` (opens with the same
    trace are interchangeable for covering).  For each cover a subcover is
    built by choosing one member per point.
    """
    s = _mask(T.n, S)
    traces = sorted({u & s for u in T.opens if u & s})
    if len(traces) > guard:
        raise GuardExceeded(f"{len(traces)} distinct open traces exceed guard {guard}")
    k = len(traces)
    for pick in range(1 << k):
        cover = [traces[i] for i in range(k) if pick >> i & 1]
        union = 0
        for t in cover:
            union |= t
        if union & s != s:
            continue
        sub = []
        for x in points_of(s):
            sub.append(next(t for t in cover if t >> x & 1))
        got = 0
        for t in sub:
            got |= t
        if got != s:
            return False
    return True


def has_fip(sets: Iterable[int]) -> bool:
    """Finite intersection property of a finite family of masks.

    For a finite family the meet of all members is the smallest finite meet,
    so one intersection decides it.  The empty family has the property.
    """
    meet = -1
    for s in sets:
        meet &= s
        if meet == 0:
            return False
    return True


def is_compact_fip(S: SetLike, base: SetFamily, guard: int = FIP_GUARD) -> bool:
    """Closed-base compactness: every ``zeta`` in ``base`` with ``{S} + zeta``
    f.i.p. meets ``S`` in its intersection."""
    members = base.members
    if len(members) > guard:
        raise GuardExceeded(f"closed base of {len(members)} members exceeds guard {guard}")
    s = _mask(base.n, S)

    # running is S ∩ ⋂zeta; once empty, no extension of zeta has f.i.p. with S
    def walk(i: int, zeta: list[int], running: int) -> bool:
        if has_fip([s, *zeta]) and s & running == 0:
            return False
        for j in range(i, len(members)):
            nxt = running & members[j]
            if nxt == 0:
                continue
            zeta.append(members[j])
            ok = walk(j + 1, zeta, nxt)
            zeta.pop()
            if not ok:
                return False
        return True

    if s == 0:
        return True
    return walk(0, [], s)


def closed_family(T: FiniteTopology) -> SetFamily:
    return SetFamily(T.n, T.closed_sets)
