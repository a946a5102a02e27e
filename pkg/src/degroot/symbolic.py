"""Rule-based duals for a closed catalog of infinite topologies.

A space is a (family, cardinal) pair.  Each family's dual is given by a
rewrite rule; the derivation of every rule is written out in
``docs/symbolic_rules.md``.  Cardinals are restricted to finite sizes,
aleph-0 and aleph-1.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Callable, Optional

from .classification import Classification, classify
from .dualization import DualSequence
from .errors import NotTruncatable, ParseError, RuleInconsistency, UnknownFamily
from .finite import FiniteTopology, discrete, indiscrete


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    tag: str  # "finite" | "aleph0" | "aleph1"
    size: Optional[int] = None

    def __post_init__(self):
        if self.tag == "finite":
            if self.size is None or self.size < 0:
                raise ValueError("finite cardinal needs a non-negative size")
        elif self.tag in ("aleph0", "aleph1"):
            if self.size is not None:
                raise ValueError(f"{self.tag} takes no size")
        else:
            raise ValueError(f"unknown cardinal tag {self.tag!r}")

    @classmethod
    def finite(cls, n: int) -> Cardinal:
        return cls("finite", n)

    @property
    def is_finite(self) -> bool:
        return self.tag == "finite"

    def _key(self):
        return {"finite": 0, "aleph0": 1, "aleph1": 2}[self.tag], self.size or 0

    def __lt__(self, other: Cardinal) -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        return str(self.size) if self.is_finite else self.tag


ALEPH0 = Cardinal("aleph0")
ALEPH1 = Cardinal("aleph1")


class Family(enum.Enum):
    DISCRETE = "discrete"
    INDISCRETE = "indiscrete"
    COFINITE = "cofinite"
    COCOUNTABLE = "cocountable"
    INITIAL_SEGMENTS_MINUS_FINITE = "initial-segments-minus-finite"


@dataclass(frozen=True)
class SymbolicTopology:
    family: Family
    kappa: Cardinal

    def __post_init__(self):
        if self.family is Family.INITIAL_SEGMENTS_MINUS_FINITE and self.kappa != ALEPH1:
            raise ValueError("initial segments minus finite sets live on aleph1 only")

    def __str__(self) -> str:
        return f"{self.family.value}@{self.kappa}"


def normalize(S: SymbolicTopology) -> SymbolicTopology:
    fam, k = S.family, S.kappa
    if fam is Family.COFINITE and k.is_finite:
        return SymbolicTopology(Family.DISCRETE, k)
    if fam is Family.COCOUNTABLE and k <= ALEPH0:
        return SymbolicTopology(Family.DISCRETE, k)
    if fam is Family.INDISCRETE and k.is_finite and k.size <= 1:
        return SymbolicTopology(Family.DISCRETE, k)
    return S


# Rules: compact saturated sets of each family, taken as a closed base.
def _dual_discrete(k: Cardinal) -> SymbolicTopology:
    # compact = finite; closed sets generated = finite sets and X
    return SymbolicTopology(Family.DISCRETE if k.is_finite else Family.COFINITE, k)


def _dual_indiscrete(k: Cardinal) -> SymbolicTopology:
    # saturated = {}, X
    return SymbolicTopology(Family.INDISCRETE, k)


def _dual_cofinite(k: Cardinal) -> SymbolicTopology:
    # every subset compact, T1 so every subset saturated
    return SymbolicTopology(Family.DISCRETE, k)


def _dual_cocountable(k: Cardinal) -> SymbolicTopology:
    # compact = finite (an infinite set contains a countable infinite D; the
    # cocountable sets (X - D) + {d} cover it with no finite subcover)
    return SymbolicTopology(Family.COFINITE, k)


def _dual_initial_segments(k: Cardinal) -> SymbolicTopology:
    # compact = empty or having a greatest element; these generate exactly
    # the countable sets plus X as closed sets
    return SymbolicTopology(Family.COCOUNTABLE, k)


RULES: dict[Family, Callable[[Cardinal], SymbolicTopology]] = {
    Family.DISCRETE: _dual_discrete,
    Family.INDISCRETE: _dual_indiscrete,
    Family.COFINITE: _dual_cofinite,
    Family.COCOUNTABLE: _dual_cocountable,
    Family.INITIAL_SEGMENTS_MINUS_FINITE: _dual_initial_segments,
}


def symbolic_dual(S: SymbolicTopology) -> SymbolicTopology:
    S = normalize(S)
    try:
        rule = RULES[S.family]
    except KeyError:
        raise UnknownFamily(f"no dual rule for {S.family}") from None
    return normalize(rule(S.kappa))


def symbolic_dual_sequence(S: SymbolicTopology) -> tuple[DualSequence, Classification]:
    stages = [normalize(S)]
    for _ in range(4):
        stages.append(symbolic_dual(stages[-1]))
    if stages[2] != stages[4]:
        raise RuleInconsistency(f"rules give different second and fourth duals for {S}")
    seq = DualSequence(tuple(stages))
    return seq, classify(seq)


def specialization_kind(S: SymbolicTopology) -> str:
    """``"identity"`` for T1 families, ``"full"`` for indiscrete on 2+ points."""
    S = normalize(S)
    return "full" if S.family is Family.INDISCRETE else "identity"


def truncate(S: SymbolicTopology, n: int) -> FiniteTopology:
    """The same family on ``n`` points."""
    fam = S.family
    if fam in (Family.DISCRETE, Family.COFINITE):
        # cofinite on a finite carrier is discrete
        return discrete(n)
    if fam is Family.INDISCRETE:
        return indiscrete(n)
    raise NotTruncatable(f"{fam.value} has no faithful finite truncation")


def truncation_consistent(S: SymbolicTopology, n: int) -> bool:
    """Finite dual of the truncation equals the truncation of the rule's dual."""
    from .dualization import dual

    on_n = normalize(SymbolicTopology(S.family, Cardinal.finite(n)))
    return dual(truncate(S, n)) == truncate(symbolic_dual(on_n), n)


_ALIASES = {
    "example4.5": SymbolicTopology(Family.INITIAL_SEGMENTS_MINUS_FINITE, ALEPH1),
}
_TOKEN = re.compile(r"^([a-z-]+)@(aleph0|aleph1|\d+)$")


def parse_symbolic(token: str) -> SymbolicTopology:
    """Parse ``family@cardinal`` (``discrete@aleph1``, ``cofinite@3``) or an alias."""
    token = token.strip().lower()
    if token in _ALIASES:
        return _ALIASES[token]
    m = _TOKEN.match(token)
    if not m:
        raise ParseError(f"not a symbolic space: {token!r}")
    try:
        fam = Family(m.group(1))
    except ValueError:
        raise ParseError(f"unknown family {m.group(1)!r}") from None
    card = m.group(2)
    kappa = Cardinal.finite(int(card)) if card.isdigit() else Cardinal(card)
    try:
        return normalize(SymbolicTopology(fam, kappa))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def catalog() -> list[SymbolicTopology]:
    """Every normalized catalog member over the cardinals 0..3, aleph0, aleph1."""
    cards = [Cardinal.finite(i) for i in range(4)] + [ALEPH0, ALEPH1]
    out: list[SymbolicTopology] = []
    for fam in Family:
        for k in cards:
            if fam is Family.INITIAL_SEGMENTS_MINUS_FINITE and k != ALEPH1:
                continue
            S = normalize(SymbolicTopology(fam, k))
            if S not in out:
                out.append(S)
    return out
