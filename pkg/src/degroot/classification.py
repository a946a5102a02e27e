"""G-class membership and the n-generative number of a space.

Classification works on any :class:`DualSequence`, so finite topologies and
symbolic catalog members share one code path.

The two three-step classes are read as ``g3b: t^ddd == t^d`` and
``g3c: t^ddd == t^dd``.  (The second reading is the only one under which the
``G2b == G3c`` identity is a statement about distinct classes.)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from typing import Any

from .dualization import DualSequence, dual, dual_power, dual_sequence
from .finite import FiniteTopology

# Composition table of {e, d, dd, ddd}, entries as powers of d.
MONOID_TABLE = (
    (0, 1, 2, 3),
    (1, 2, 3, 2),
    (2, 3, 2, 3),
    (3, 2, 3, 2),
)


def reduce_power(k: int) -> int:
    """Normal form of ``d^k`` under ``d^4 = d^2``."""
    return k if k < 4 else 2 + (k - 2) % 2


@dataclass(frozen=True)
class RawClassFlags:
    g1: bool
    g2a: bool
    g2b: bool
    g3a: bool
    g3b: bool
    g3c: bool
    g4: bool

    def pattern(self) -> str:
        return "".join("1" if v else "0" for v in asdict(self).values())

    def names(self) -> list[str]:
        return [k.upper() for k, v in asdict(self).items() if v]


@dataclass(frozen=True)
class Classification:
    flags: RawClassFlags
    n_generative: int
    sequence: DualSequence

    @property
    def in_g2(self) -> bool:
        return self.flags.g2a or self.flags.g2b

    @property
    def in_g3(self) -> bool:
        f = self.flags
        return f.g3a or f.g3b or f.g3c

    def label(self) -> str:
        """Short form such as ``2-generative, G2a``: the flags at the minimal level."""
        f = self.flags
        level = {
            1: ["G1"] if f.g1 else [],
            2: [n for n, v in (("G2a", f.g2a), ("G2b", f.g2b)) if v],
            3: [n for n, v in (("G3a", f.g3a), ("G3b", f.g3b), ("G3c", f.g3c)) if v],
            4: ["G4"],
        }[self.n_generative]
        return f"{self.n_generative}-generative, " + "/".join(level)

    def to_json(self) -> dict:
        return {
            "n_generative": self.n_generative,
            "flags": asdict(self.flags),
            "sequence_distinct": self.sequence.distinct_count,
        }


def classify(seq: DualSequence) -> Classification:
    t, d1, d2, d3, d4 = seq.stages
    flags = RawClassFlags(
        g1=d1 == t,
        g2a=d2 == t,
        g2b=d2 == d1,
        g3a=d3 == t,
        g3b=d3 == d1,
        g3c=d3 == d2,
        g4=d4 == d2,
    )
    if flags.g1:
        n = 1
    elif flags.g2a or flags.g2b:
        n = 2
    elif flags.g3a or flags.g3b or flags.g3c:
        n = 3
    else:
        n = 4
    return Classification(flags, n, seq)


def classify_topology(T: FiniteTopology) -> Classification:
    return classify(dual_sequence(T))


def verify_monoid_table(T: FiniteTopology) -> bool:
    """Every cell ``a o b`` of the table equals ``d^(a+b)`` on ``T``."""
    powers = [dual_power(T, k) for k in range(7)]
    return all(
        powers[MONOID_TABLE[a][b]] == powers[a + b] for a in range(4) for b in range(4)
    )


def verify_prop_3_2(c: Classification) -> bool:
    f = c.flags
    at_most_three = c.sequence.distinct_count <= 3
    return (
        f.g1 == f.g3a
        and f.g1 == (f.g2a and f.g2b)
        and f.g1 == (f.g2a and f.g3c)
        and f.g2b == (f.g3b and f.g3c)
        and (f.g3b or f.g3c) == at_most_three
    )


def verify_prop_3_5(c: Classification) -> bool:
    return c.flags.g2b == c.flags.g3c


def check_arises_as_dual(tau: Classification) -> bool:
    """A dual topology lies in G3 and not in G2b minus G1."""
    f = tau.flags
    return tau.sequence.distinct_count <= 3 and not (f.g2b and not f.g1)


def verify_cor_3_7(sigma: Any) -> bool:
    """Classify ``dual(sigma)`` and apply :func:`check_arises_as_dual`.

    Accepts a finite topology or a symbolic catalog member.
    """
    if isinstance(sigma, FiniteTopology):
        return check_arises_as_dual(classify_topology(dual(sigma)))
    from .symbolic import SymbolicTopology, symbolic_dual, symbolic_dual_sequence

    if isinstance(sigma, SymbolicTopology):
        return check_arises_as_dual(symbolic_dual_sequence(symbolic_dual(sigma))[1])
    raise TypeError(f"cannot dualize {type(sigma).__name__}")


@dataclass
class DualImageReport:
    n: int
    labeled: int
    image_size: int
    homeo_classes: int
    homeo_classes_in_image: int
    # n_generative -> (spaces, spaces that are duals)
    by_generative: dict[int, tuple[int, int]]

    @property
    def all_arise(self) -> bool:
        return self.image_size == self.labeled

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labeled": self.labeled,
            "image_size": self.image_size,
            "all_arise_as_duals": self.all_arise,
            "homeo_classes": self.homeo_classes,
            "homeo_classes_in_image": self.homeo_classes_in_image,
            "by_generative": {str(k): list(v) for k, v in sorted(self.by_generative.items())},
        }


def dual_image_report(n: int) -> DualImageReport:
    """Which size-``n`` topologies are the dual of some topology, by G-class."""
    from .census import canonicalize, topologies

    spaces = list(topologies(n))
    image = {dual(T) for T in spaces}
    totals: Counter = Counter()
    hits: Counter = Counter()
    for T in spaces:
        k = classify_topology(T).n_generative
        totals[k] += 1
        hits[k] += T in image
    classes = {canonicalize(T) for T in spaces}
    image_classes = {canonicalize(T) for T in image}
    return DualImageReport(
        n=n,
        labeled=len(spaces),
        image_size=len(image),
        homeo_classes=len(classes),
        homeo_classes_in_image=len(image_classes & classes),
        by_generative={k: (totals[k], hits[k]) for k in totals},
    )
