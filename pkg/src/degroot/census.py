"""Exhaustive enumeration of finite topologies and the classification census.

Finite topologies are enumerated as preorders (their specialization orders)
and turned into spaces with :func:`alexandrov_from_preorder`.  Two independent
generators exist: :func:`enumerate_preorders` fills the relation row by row,
:func:`preorders_by_extension` grows it one point at a time.  A third,
:func:`naive_enumerate_topologies`, filters raw set families and serves as the
oracle for small carriers.
"""

from __future__ import annotations

import hashlib
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations, product
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator, Optional

from . import classification as _classification
from . import dualization as _dualization
from . import finite as _finite
from .classification import (
    classify,
    verify_cor_3_7,
    verify_monoid_table,
    verify_prop_3_2,
    verify_prop_3_5,
)
from .dualization import (
    check_cor_2_5,
    check_cor_2_6,
    check_lemma_3_3,
    check_lemma_3_4,
    check_theorem_2_4,
    dual,
    dual_sequence,
)
from .errors import CapExceeded, TheoremViolation, TopologyError, VerificationFailure
from .finite import (
    DEFAULT_MAX_N,
    FiniteTopology,
    Preorder,
    _perm_table,
    alexandrov_from_preorder,
    full_mask,
    points_of,
    validate_topology,
)

NAIVE_CAP = 4
CENSUS_CAP = 5


def _submasks_ascending(mask: int) -> list[int]:
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    subs.reverse()
    return subs


def enumerate_preorders(
    n: int, cap: int = DEFAULT_MAX_N, prefix: Optional[tuple[int, ...]] = None
) -> Iterator[Preorder]:
    """Every preorder on ``n`` points exactly once, in a fixed order.

    Row ``j`` (the up-set of ``j``) is chosen after rows ``0..j-1``.  It must
    sit inside every earlier row that contains ``j`` and must contain every
    earlier row whose point it contains; together these check each
    transitivity constraint when the larger of its two points is placed.
    ``prefix`` pins the first rows, restricting output to one work block.
    """
    if n > cap:
        raise CapExceeded(f"n={n} above cap {cap}")
    for rows in _extend_rows(n, [0] * n, 0, n, prefix or ()):
        yield Preorder(n, rows)


def _extend_rows(n: int, rows: list[int], j: int, stop: int, prefix: tuple[int, ...]):
    if j == stop:
        yield tuple(rows[:stop])
        return
    allowed = full_mask(n)
    for i in range(j):
        if rows[i] >> j & 1:
            allowed &= rows[i]
    bit = 1 << j
    if j < len(prefix):
        candidates = [prefix[j]] if prefix[j] & bit and prefix[j] & ~allowed == 0 else []
    else:
        candidates = [s | bit for s in _submasks_ascending(allowed & ~bit)]
    earlier = bit - 1
    for row in candidates:
        if all(rows[i] & ~row == 0 for i in points_of(row & earlier)):
            rows[j] = row
            yield from _extend_rows(n, rows, j + 1, stop, prefix)
    rows[j] = 0


def work_blocks(n: int, depth: int = 2) -> list[tuple[int, ...]]:
    """Valid prefixes of the first ``depth`` rows; each is one independent block."""
    return list(_extend_rows(n, [0] * n, 0, min(depth, n), ()))


def _down_closed_sets(P: Preorder) -> list[int]:
    sets = {0}
    for col in P.cols:
        sets |= {s | col for s in sets}
    return sorted(sets)


def preorders_by_extension(n: int, cap: int = DEFAULT_MAX_N) -> Iterator[Preorder]:
    """Every preorder on ``n`` points, built by adding the last point to each
    preorder on ``n - 1`` points.

    The new point ``p`` gets a down-closed set ``D`` of points below it and an
    up-closed set ``U`` of points above it, with ``d <= u`` already holding
    for every ``d`` in ``D`` and ``u`` in ``U``.
    """
    if n > cap:
        raise CapExceeded(f"n={n} above cap {cap}")
    if n == 0:
        yield Preorder(0, ())
        return
    p = n - 1
    pbit = 1 << p
    for P in preorders_by_extension(n - 1, cap):
        downs = _down_closed_sets(P)
        ups = sorted(alexandrov_from_preorder(P).opens)
        for D in downs:
            need = full_mask(p)
            for d in points_of(D):
                need &= P.rows[d]
            for U in ups:
                if U & ~need:
                    continue
                rows = [r | pbit if D >> x & 1 else r for x, r in enumerate(P.rows)]
                rows.append(U | pbit)
                yield Preorder(n, tuple(rows))


def topologies(n: int, cap: int = DEFAULT_MAX_N) -> Iterator[FiniteTopology]:
    for P in enumerate_preorders(n, cap):
        yield alexandrov_from_preorder(P)


def naive_enumerate_topologies(n: int) -> Iterator[FiniteTopology]:
    """Filter every family of subsets of ``{0..n-1}`` through the axioms."""
    if n > NAIVE_CAP:
        raise CapExceeded(f"naive enumeration limited to n <= {NAIVE_CAP}")
    subsets = 1 << n
    for pick in range(1 << subsets):
        family = [s for s in range(subsets) if pick >> s & 1]
        try:
            yield validate_topology(n, family)
        except TopologyError:
            continue


def _fast_rows(T: FiniteTopology) -> list[int]:
    # up-set of x = smallest open containing x
    rows = []
    for x in range(T.n):
        r = T.full
        for u in T.opens:
            if u >> x & 1:
                r &= u
        rows.append(r)
    return rows


_PERM_TABLES: dict[tuple[int, tuple[int, ...]], list[int]] = {}


def _table(n: int, perm: tuple[int, ...]) -> list[int]:
    key = (n, perm)
    t = _PERM_TABLES.get(key)
    if t is None:
        t = _PERM_TABLES[key] = _perm_table(n, perm)
    return t


def canonicalize(T: FiniteTopology) -> FiniteTopology:
    """Least relabeling of ``T`` among those listing points by degree signature.

    Points are grouped by (out-degree, in-degree) in the specialization
    preorder; only relabelings that place the groups in signature order are
    tried, and the lexicographically least sorted open-set encoding wins.
    """
    n = T.n
    rows = _fast_rows(T)
    cols = [0] * n
    for x, r in enumerate(rows):
        for y in points_of(r):
            cols[y] |= 1 << x
    sig = [(bin(rows[x]).count("1"), bin(cols[x]).count("1")) for x in range(n)]
    groups: dict[tuple[int, int], list[int]] = {}
    for x in range(n):
        groups.setdefault(sig[x], []).append(x)
    order = sorted(groups)
    slots = []
    start = 0
    for key in order:
        members = groups[key]
        slots.append((members, list(range(start, start + len(members)))))
        start += len(members)
    best = None
    for choice in product(*(permutations(labels) for _, labels in slots)):
        perm = [0] * n
        for (members, _), labels in zip(slots, choice):
            for x, lab in zip(members, labels):
                perm[x] = lab
        table = _table(n, tuple(perm))
        enc = tuple(sorted(table[u] for u in T.opens))
        if best is None or enc < best:
            best = enc
    return FiniteTopology(n, best if best is not None else T.opens)


# -- census ------------------------------------------------------------------------


@dataclass
class CensusRow:
    n: int
    labeled_count: int
    homeo_count: int
    class_counts: dict[str, int]
    partition_count: int
    equivalence_count: int = 0
    laws_checked: int = 0
    cross_validated: Optional[bool] = None

    @property
    def g2a_only(self) -> int:
        """Spaces in G2a but not G1, that is the 2-generative ones."""
        return sum(v for k, v in self.class_counts.items() if k.startswith("2:"))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labeled": self.labeled_count,
            "homeo": self.homeo_count,
            "partition": self.partition_count,
            "equivalence_relations": self.equivalence_count,
            "g1": self.class_counts_by_generative().get(1, 0),
            "g2a_only": self.g2a_only,
            "class_counts": dict(sorted(self.class_counts.items())),
            "laws_checked": self.laws_checked,
            "cross_validated": self.cross_validated,
        }

    @classmethod
    def from_json(cls, obj: dict) -> CensusRow:
        return cls(
            n=obj["n"],
            labeled_count=obj["labeled"],
            homeo_count=obj["homeo"],
            class_counts=dict(obj["class_counts"]),
            partition_count=obj["partition"],
            equivalence_count=obj["equivalence_relations"],
            laws_checked=obj["laws_checked"],
            cross_validated=obj["cross_validated"],
        )

    def class_counts_by_generative(self) -> dict[int, int]:
        out: Counter = Counter()
        for k, v in self.class_counts.items():
            out[int(k.split(":")[0])] += v
        return dict(out)


CSV_COLUMNS = ("n", "labeled", "homeo", "g1", "g2a_only", "partition")


def csv_line(row: CensusRow) -> str:
    data = row.to_json()
    return ",".join(str(data[c]) for c in CSV_COLUMNS)


@dataclass
class _Partial:
    labeled: int = 0
    forms: set = field(default_factory=set)
    classes: Counter = field(default_factory=Counter)
    partitions: int = 0
    equivalences: int = 0
    laws: int = 0

    def merge(self, other: _Partial) -> _Partial:
        return _Partial(
            self.labeled + other.labeled,
            self.forms | other.forms,
            self.classes + other.classes,
            self.partitions + other.partitions,
            self.equivalences + other.equivalences,
            self.laws + other.laws,
        )


def _fail(law: str, T: FiniteTopology):
    raise VerificationFailure(law, json.dumps(T.to_json(), sort_keys=True))


def verify_space(T: FiniteTopology, P: Optional[Preorder] = None):
    """Run every census law on ``T``; returns ``(classification, laws run)``.

    Raises :class:`VerificationFailure` carrying ``T`` as JSON on the first
    failing law.
    """
    try:
        seq = dual_sequence(T)
    except TheoremViolation:
        _fail("d2-equals-d4", T)
    c = classify(seq)
    symmetric = (P if P is not None else _finite.specialization(T)).is_symmetric()
    checks = (
        ("saturated-preserved", lambda: check_theorem_2_4(T)),
        ("compact-stable", lambda: check_cor_2_5(T)),
        ("d2-equals-d4", lambda: check_cor_2_6(T)),
        ("monoid-table", lambda: verify_monoid_table(T)),
        ("g1-g3-equivalences", lambda: verify_prop_3_2(c)),
        ("g2b-iff-g3c", lambda: verify_prop_3_5(c)),
        ("self-dual-symmetric", lambda: check_lemma_3_3(T)),
        ("closed-meet", lambda: check_lemma_3_4(T)),
        ("dual-in-g3", lambda: verify_cor_3_7(T)),
        ("g2-involution", lambda: not c.in_g2 or dual(dual(T)) == T),
        ("finite g2a", lambda: c.flags.g2a),
        ("g1 iff symmetric", lambda: c.flags.g1 == symmetric),
    )
    for law, check in checks:
        if not check():
            _fail(law, T)
    return c, len(checks)


def _census_block(args: tuple[int, tuple[int, ...]]) -> _Partial:
    n, prefix = args
    part = _Partial()
    for P in enumerate_preorders(n, prefix=prefix):
        T = alexandrov_from_preorder(P)
        c, laws = verify_space(T, P)
        part.labeled += 1
        part.laws += laws
        part.forms.add(canonicalize(T).opens)
        part.classes[f"{c.n_generative}:{c.flags.pattern()}"] += 1
        part.partitions += c.flags.g1
        part.equivalences += P.is_symmetric()
    _dualization.dual.cache_clear()
    _dualization.compact_saturated_family.cache_clear()
    return part


def code_version() -> str:
    h = hashlib.sha256()
    for mod in (_finite, _dualization, _classification):
        h.update(Path(mod.__file__).read_bytes())
    h.update(Path(__file__).read_bytes())
    return h.hexdigest()[:16]


def census(
    n: int,
    jobs: int = 1,
    cache_dir: Optional[os.PathLike] = None,
    cross_validate: bool = False,
    cap: int = CENSUS_CAP,
) -> CensusRow:
    """Enumerate, verify and classify every topology on ``n`` points."""
    if n > cap:
        raise CapExceeded(f"census limited to n <= {cap}")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    cache_file = None
    if cache_dir is not None:
        cache_file = Path(cache_dir) / f"census-n{n}-{code_version()}.json"
        if cache_file.exists():
            row = CensusRow.from_json(json.loads(cache_file.read_text()))
            if not cross_validate or row.cross_validated is not None:
                return row

    blocks = [(n, p) for p in work_blocks(n)]
    if jobs == 1:
        parts = [_census_block(b) for b in blocks]
    else:
        with Pool(jobs) as pool:
            parts = pool.map(_census_block, blocks, chunksize=1)
    total = _Partial()
    for p in parts:
        total = total.merge(p)

    crossed = None
    if cross_validate:
        crossed = set(enumerate_preorders(n, cap=cap)) == set(preorders_by_extension(n, cap=cap))
        crossed = crossed and sum(1 for _ in preorders_by_extension(n, cap=cap)) == total.labeled
    row = CensusRow(
        n=n,
        labeled_count=total.labeled,
        homeo_count=len(total.forms),
        class_counts=dict(sorted(total.classes.items())),
        partition_count=total.partitions,
        equivalence_count=total.equivalences,
        laws_checked=total.laws,
        cross_validated=crossed,
    )
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(json.dumps(row.to_json(), sort_keys=True, indent=2) + "\n")
    return row
