import json
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings

import oracles
from conftest import topologies as topology_strategy
from degroot.census import (
    CensusRow,
    canonicalize,
    census,
    csv_line,
    enumerate_preorders,
    naive_enumerate_topologies,
    preorders_by_extension,
    topologies,
    verify_space,
    work_blocks,
)
from degroot.errors import CapExceeded, VerificationFailure
from degroot.finite import alexandrov_from_preorder, discrete, relabel, sierpinski


@pytest.mark.parametrize("n", range(5))
def test_preorder_counts_match_brute_force(n):
    got = list(enumerate_preorders(n))
    assert all(P.is_valid() for P in got)
    assert len(set(got)) == len(got)
    if n <= 3:
        assert len(got) == oracles.preorder_count(n)
    assert len(got) == [1, 1, 4, 29, 355][n]


def test_preorder_enumeration_is_deterministic():
    assert list(enumerate_preorders(4)) == list(enumerate_preorders(4))


def test_blocks_partition_enumeration():
    for n in range(6):
        whole = list(enumerate_preorders(n))
        for depth in (1, 2, 3):
            pieces = [P for p in work_blocks(n, depth) for P in enumerate_preorders(n, prefix=p)]
            assert pieces == whole


def test_two_strategies_agree():
    for n in range(6):
        assert set(enumerate_preorders(n)) == set(preorders_by_extension(n))
    assert sum(1 for _ in preorders_by_extension(5)) == 6942


def test_caps():
    with pytest.raises(CapExceeded):
        list(enumerate_preorders(8))
    with pytest.raises(CapExceeded):
        list(naive_enumerate_topologies(5))
    with pytest.raises(CapExceeded):
        census(6)


def test_naive_matches_set_oracle():
    for n in range(4):
        got = {T.opens for T in naive_enumerate_topologies(n)}
        expect = {oracles.to_masks(T) for T in oracles.all_topologies(n)}
        assert got == expect
    assert [sum(1 for _ in naive_enumerate_topologies(n)) for n in range(5)] == [1, 1, 4, 29, 355]


def test_bijection_under_canonicalization():
    for n in range(5):
        a = Counter(canonicalize(T) for T in topologies(n))
        b = Counter(canonicalize(T) for T in naive_enumerate_topologies(n))
        assert a == b


def test_canonicalize_examples():
    S = sierpinski()
    assert canonicalize(S) == canonicalize(relabel(S, [1, 0]))
    assert canonicalize(discrete(3)) == discrete(3)
    assert len({canonicalize(T) for T in topologies(3)}) == 9


def test_canonical_classes_match_oracle():
    for n in range(5):
        spaces = [oracles.from_masks(n, T.opens) for T in naive_enumerate_topologies(n)]
        assert len({canonicalize(T) for T in topologies(n)}) == oracles.homeomorphism_classes(n, spaces)


@settings(max_examples=60)
@given(topology_strategy(max_n=5))
def test_canonicalize_invariant_and_idempotent(T):
    C = canonicalize(T)
    assert canonicalize(C) == C
    perms = list(permutations(range(T.n)))
    for perm in perms[:: max(1, len(perms) // 12)]:
        assert canonicalize(relabel(T, perm)) == C


def test_census_small_rows():
    row = census(1)
    assert row.labeled_count == 1 and row.class_counts_by_generative() == {1: 1}
    row = census(3)
    assert (row.labeled_count, row.homeo_count, row.partition_count) == (29, 9, 5)
    row = census(4)
    assert row.labeled_count == 355 and row.partition_count == 15
    assert sum(row.class_counts.values()) == row.labeled_count


def test_partition_counts_match_equivalence_relations():
    for n in range(5):
        row = census(n)
        assert row.partition_count == row.equivalence_count == oracles.equivalence_relation_count(n)


def test_census_merge_is_order_independent():
    a = census(4, jobs=1)
    b = census(4, jobs=2)
    assert a.to_json() == b.to_json()


def test_census_cache_round_trip(tmp_path):
    first = census(3, cache_dir=tmp_path)
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    assert census(3, cache_dir=tmp_path) == first
    assert CensusRow.from_json(json.loads(files[0].read_text())) == first


def test_csv_line():
    assert csv_line(census(3)) == "3,29,9,5,24,5"


def test_verify_space_reports_counterexample(monkeypatch):
    import degroot.census as mod

    monkeypatch.setattr(mod, "check_theorem_2_4", lambda T: T.n != 2)
    with pytest.raises(VerificationFailure) as exc:
        verify_space(sierpinski())
    assert exc.value.law == "saturated-preserved"
    assert json.loads(exc.value.counterexample) == {"n": 2, "opens": [[], [0], [0, 1]]}


def test_labeled_counts_strictly_increase():
    counts = [census(n).labeled_count for n in range(1, 6)]
    assert counts == sorted(set(counts))


def test_blocks_balance_for_four_workers():
    sizes = [sum(1 for _ in enumerate_preorders(5, prefix=p)) for p in work_blocks(5)]
    assert sum(sizes) == 6942
    assert max(sizes) / sum(sizes) < 0.125
