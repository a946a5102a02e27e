"""The dual operator on finite spaces and pointwise checks of its laws.

``dual(T)`` takes the compact saturated sets of ``T`` as a closed base.  Every
function here is pure; ``dual`` and ``compact_saturated_family`` are memoized
because census runs ask for the same iterates many times.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Iterator

from .errors import PreconditionError, PreconditionFIPViolated, TheoremViolation, WitnessNotFound
from .finite import (
    FiniteTopology,
    PointSet,
    SetFamily,
    SetLike,
    _mask,
    closed_family,
    down_set,
    is_compact_fip,
    points_of,
    specialization,
    topology_from_closed_base,
    up_set,
)

MAX_POWER = 6


@dataclass(frozen=True)
class DualSequence:
    """Stages ``[t, t^d, t^dd, t^ddd, t^dddd]`` of any equality-comparable topology."""

    stages: tuple[Any, ...]

    @property
    def distinct_count(self) -> int:
        distinct: list[Any] = []
        for s in self.stages[:4]:
            if s not in distinct:
                distinct.append(s)
        return len(distinct)


def _saturate(opens: tuple[int, ...], full: int, s: int) -> int:
    out = full
    for u in opens:
        if s & ~u == 0:
            out &= u
    return out


@lru_cache(maxsize=None)
def compact_saturated_family(T: FiniteTopology) -> SetFamily:
    # every subset of a finite carrier is compact: pick one cover member per point
    full = T.full
    members = tuple(s for s in range(1 << T.n) if _saturate(T.opens, full, s) == s)
    return SetFamily(T.n, members)


@lru_cache(maxsize=None)
def dual(T: FiniteTopology) -> FiniteTopology:
    return topology_from_closed_base(T.n, compact_saturated_family(T))


def dual_power(T: FiniteTopology, k: int) -> FiniteTopology:
    if not 0 <= k <= MAX_POWER:
        raise ValueError(f"dual power {k} outside 0..{MAX_POWER}")
    for _ in range(k):
        T = dual(T)
    return T


def dual_sequence(T: FiniteTopology) -> DualSequence:
    stages = [T]
    for _ in range(4):
        stages.append(dual(stages[-1]))
    if stages[2] != stages[4]:
        raise TheoremViolation(f"second and fourth duals differ for {T!r}")
    return DualSequence(tuple(stages))


# -- law checks ------------------------------------------------------------------


def check_theorem_2_4(T: FiniteTopology) -> bool:
    """Compact saturated sets of ``T`` stay compact saturated in ``T^dd``."""
    return compact_saturated_family(T).issubset(compact_saturated_family(dual_power(T, 2)))


def check_cor_2_5(T: FiniteTopology) -> bool:
    return compact_saturated_family(dual_power(T, 1)) == compact_saturated_family(dual_power(T, 3))


def check_cor_2_6(T: FiniteTopology) -> bool:
    return dual_power(T, 2) == dual_power(T, 4)


def check_lemma_2_1(T: FiniteTopology) -> bool:
    """``C & P`` is compact for compact ``C`` and ``P`` in the second-dual base.

    Compactness is decided by the closed-base f.i.p. criterion against the
    closed sets of ``T``.
    """
    closed = closed_family(T)
    compact = {s for s in range(1 << T.n) if is_compact_fip(s, closed)}
    second = compact_saturated_family(dual(T)).members
    return all(c & p in compact for c in compact for p in second)


def witness_lemma_2_3(
    T: FiniteTopology, C: SetLike, psi: SetFamily | Iterable[SetLike]
) -> dict[int, int]:
    """Choose ``xi(M)`` in each ``M`` of ``psi`` so that ``C`` together with the
    closures ``cl{xi(M)}`` keeps the finite intersection property.

    Returns ``{mask of M: chosen point}``.  Depth-first search over choice
    functions; a branch is cut as soon as the running meet with ``C`` empties.
    """
    c = _mask(T.n, C)
    family = list(psi.members if isinstance(psi, SetFamily) else sorted({_mask(T.n, m) for m in psi}))
    if c not in compact_saturated_family(T):
        raise PreconditionError(f"{PointSet(c, T.n)} is not compact saturated")
    second = compact_saturated_family(dual(T))
    for m in family:
        if m not in second:
            raise PreconditionError(f"{PointSet(m, T.n)} is not in the second-dual base")
    meet = c
    for m in family:
        meet &= m
    if meet == 0:
        raise PreconditionFIPViolated("C together with psi lacks the finite intersection property")

    below = specialization(T).cols  # below[x] = cl{x}
    choice: dict[int, int] = {}

    def search(i: int, running: int) -> bool:
        if i == len(family):
            return True
        m = family[i]
        for x in points_of(m):
            nxt = running & below[x]
            if nxt == 0:
                continue
            choice[m] = x
            if search(i + 1, nxt):
                return True
        choice.pop(m, None)
        return False

    if not search(0, c):
        raise WitnessNotFound(f"no choice function for C={PointSet(c, T.n)} psi={family} in {T!r}")
    return dict(choice)


def lemma_2_3_instances(T: FiniteTopology) -> Iterator[tuple[int, tuple[int, ...]]]:
    """All ``(C, psi)`` with ``C`` compact saturated, ``psi`` a subfamily of the
    second-dual base and ``{C} + psi`` having the finite intersection property."""
    second = compact_saturated_family(dual(T)).members

    def grow(start: int, chosen: list[int], running: int):
        yield tuple(chosen)
        for j in range(start, len(second)):
            nxt = running & second[j]
            if nxt:
                chosen.append(second[j])
                yield from grow(j + 1, chosen, nxt)
                chosen.pop()

    for c in compact_saturated_family(T).members:
        if c:
            for psi in grow(0, [], c):
                yield c, psi


def check_lemma_2_3(T: FiniteTopology) -> int:
    """Run the witness search on every admissible ``(C, psi)``; returns how many."""
    below = specialization(T).cols
    count = 0
    for c, psi in lemma_2_3_instances(T):
        chosen = witness_lemma_2_3(T, c, psi)
        meet = c
        for m, x in chosen.items():
            if not m >> x & 1:
                raise WitnessNotFound(f"chosen point {x} outside its set")
            meet &= below[x]
        if not meet:
            raise WitnessNotFound("returned choice breaks the finite intersection property")
        count += 1
    return count


def up_equals_down(T: FiniteTopology) -> bool:
    P = specialization(T)
    return all(up_set(P, a) == down_set(P, a) for a in range(1 << T.n))


def check_lemma_3_3(T: FiniteTopology) -> bool:
    if dual(T) != T:
        return True
    return up_equals_down(T)


def check_lemma_3_4(T: FiniteTopology) -> bool:
    if not up_equals_down(T):
        return True
    second = compact_saturated_family(dual(T))
    return all(s & h in second for s in second.members for h in T.closed_sets)
