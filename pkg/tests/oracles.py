"""Brute-force reference implementations on frozensets.

Nothing here imports the package's bitmask machinery, so agreement between
the two is evidence rather than tautology.  Exponential everywhere; fine for
carriers of three or four points.
"""

from itertools import chain, combinations, permutations


def powerset(xs):
    xs = list(xs)
    return [frozenset(c) for c in chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))]


def is_topology(n, fam):
    X = frozenset(range(n))
    fam = set(fam)
    if frozenset() not in fam or X not in fam:
        return False
    return all(a | b in fam and a & b in fam for a in fam for b in fam)


def all_topologies(n):
    subsets = powerset(range(n))
    out = []
    for fam in powerset(range(len(subsets))):
        opens = {subsets[i] for i in fam}
        if is_topology(n, opens):
            out.append(frozenset(opens))
    return out


def closed_sets(n, opens):
    X = frozenset(range(n))
    return {X - u for u in opens}


def closure(n, opens, A):
    X = frozenset(range(n))
    return X.intersection(*[c for c in closed_sets(n, opens) if A <= c])


def leq(n, opens, x, y):
    return x in closure(n, opens, frozenset({y}))


def up(n, opens, A):
    return frozenset(x for x in range(n) if any(leq(n, opens, y, x) for y in A))


def down(n, opens, A):
    return frozenset(x for x in range(n) if any(leq(n, opens, x, y) for y in A))


def saturation(n, opens, A):
    X = frozenset(range(n))
    return X.intersection(*[u for u in opens if A <= u])


def generate_from_closed_base(n, base):
    """All intersections of finite unions of base members, by enumeration."""
    X = frozenset(range(n))
    base = list(base)
    unions = {frozenset().union(*sub) for sub in _subfamilies(base)}
    unions = list(unions)
    closed = {X.intersection(*sub) for sub in _subfamilies(unions)}
    return frozenset(X - c for c in closed)


def _subfamilies(items):
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def dual(n, opens):
    # all subsets of a finite space are compact
    base = [S for S in powerset(range(n)) if saturation(n, opens, S) == S]
    return generate_from_closed_base(n, base)


def relabel(opens, perm):
    return frozenset(frozenset(perm[x] for x in u) for u in opens)


def homeomorphism_classes(n, spaces):
    seen = set()
    classes = 0
    for T in spaces:
        if T in seen:
            continue
        classes += 1
        for perm in permutations(range(n)):
            seen.add(relabel(T, perm))
    return classes


def equivalence_relation_count(n):
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    count = 0
    for rel in powerset(range(len(pairs))):
        R = {pairs[i] for i in rel} | {(x, x) for x in range(n)}
        sym = all((y, x) in R for x, y in R)
        trans = all((x, z) in R for x, y in R for y2, z in R if y == y2)
        count += sym and trans
    return count


def preorder_count(n):
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    count = 0
    for rel in powerset(range(len(pairs))):
        R = {pairs[i] for i in rel} | {(x, x) for x in range(n)}
        count += all((x, z) in R for x, y in R for y2, z in R if y == y2)
    return count


def to_masks(opens):
    return tuple(sorted(sum(1 << x for x in u) for u in opens))


def from_masks(n, masks):
    return frozenset(frozenset(x for x in range(n) if m >> x & 1) for m in masks)
