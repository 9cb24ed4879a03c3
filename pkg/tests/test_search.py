import random
from fractions import Fraction
from itertools import product
from math import comb

import pytest

from delrecon import (
    BudgetError,
    NQuery,
    NTable,
    Word,
    ball_size_max,
    common_subsequence_count,
    complement,
    compute_n_exhaustive,
    delta_fast,
    deletion_distance,
    extremal_pair,
    intersection_size,
    n_formula_dist1,
    n_formula_dist2,
    overlap_lower_bound,
    overlap_upper_bound,
    recurrence_report,
    reverse,
    verify_overlap_bound,
)
from delrecon.search import bucket_scan, build_table, overlap_table_scan


def test_nquery_validation():
    NQuery(6, 0, 5)
    with pytest.raises(ValueError):
        NQuery(6, -1, 2)
    with pytest.raises(ValueError):
        NQuery(6, 1, 6)
    with pytest.raises(ValueError):
        NQuery(6, 1, 2, k=-1)


def test_compute_n_examples():
    assert compute_n_exhaustive(NQuery(6, 2, 2)).value == 6
    assert compute_n_exhaustive(NQuery(6, 1, 1)).value == 2 == n_formula_dist1(6, 1)
    for n, t in [(5, 1), (6, 2), (7, 3)]:
        assert compute_n_exhaustive(NQuery(n, 0, t)).value == ball_size_max(n, t)


def test_compute_n_argmax_attains_the_value():
    entry = compute_n_exhaustive(NQuery(7, 2, 3))
    x, y = entry.argmax
    assert deletion_distance(x, y).value >= 2
    assert intersection_size(x, y, 3, 3).size == entry.value


def test_compute_n_rejects_floor_above_radius():
    with pytest.raises(ValueError):
        compute_n_exhaustive(NQuery(6, 3, 2))


def test_compute_n_budget_guard():
    with pytest.raises(BudgetError):
        compute_n_exhaustive(NQuery(15, 1, 1))
    with pytest.raises(BudgetError):
        bucket_scan(14, 1, k=3)


def test_formula_dist1_values():
    assert n_formula_dist1(6, 1) == 2
    assert n_formula_dist1(8, 2) == 2 * ball_size_max(6, 1) == 12
    assert n_formula_dist1(10, 3) == 2 * (1 + 6 + 15) == 44
    with pytest.raises(ValueError):
        n_formula_dist1(5, 5)


def test_formula_dist2_values():
    assert n_formula_dist2(8, 2) == 6
    assert n_formula_dist2(8, 3) == 18
    assert n_formula_dist2(11, 2) == 6
    with pytest.raises(ValueError):
        n_formula_dist2(7, 2)
    with pytest.raises(ValueError):
        n_formula_dist2(9, 1)


def test_upper_bound_values():
    for t in (1, 2, 3):
        assert overlap_upper_bound(4 * t, t, t, 0) == comb(2 * t, t)
    assert overlap_upper_bound(6, 1, 2, 0) == Fraction(12)
    assert overlap_upper_bound(9, 2, 4, 0) == Fraction(comb(4, 2) * 81, 2)
    for ell in (1, 2, 4):
        assert overlap_upper_bound(8, ell, ell - 1, 2) == 0


def test_lower_bound_values():
    assert overlap_lower_bound(6, 2, 2) == 6
    assert overlap_lower_bound(2, 1, 1) == 2
    assert overlap_lower_bound(10, 2, 3) == 6 * ball_size_max(4, 1) == 24
    with pytest.raises(ValueError):
        overlap_lower_bound(5, 2, 2)
    with pytest.raises(ValueError):
        overlap_lower_bound(10, 2, 1)
    with pytest.raises(ValueError):
        overlap_lower_bound(10, 0, 1)


def test_lower_bound_attained_by_the_construction():
    x, y = extremal_pair(10, 2)
    assert intersection_size(x, y, 3, 3).size >= overlap_lower_bound(10, 2, 3)


def test_delta_fast_matches_enumeration_exhaustive_small():
    for n in range(1, 6):
        for k in (0, 1, 2):
            for xb, yb in product(range(1 << n), range(1 << (n + k))):
                x, y = Word(n, xb), Word(n + k, yb)
                for t in range(n + 1):
                    expected = intersection_size(x, y, t, t + k).size
                    assert delta_fast(x, y, t, t + k) == expected
                    assert common_subsequence_count(x, y, n - t) == expected


def test_delta_fast_matches_enumeration_random():
    rng = random.Random(5150)
    for _ in range(400):
        n = rng.randint(1, 11)
        k = rng.randint(0, 2)
        x = Word(n, rng.getrandbits(n))
        y = Word(n + k, rng.getrandbits(n + k))
        t = rng.randint(0, n)
        assert delta_fast(x, y, t, t + k) == intersection_size(x, y, t, t + k).size


def test_delta_fast_is_symmetric_under_word_transforms():
    rng = random.Random(777)
    for _ in range(300):
        n = rng.randint(1, 10)
        x = Word(n, rng.getrandbits(n))
        y = Word(n, rng.getrandbits(n))
        t = rng.randint(0, n)
        base = delta_fast(x, y, t, t)
        assert delta_fast(complement(x), complement(y), t, t) == base
        assert delta_fast(reverse(x), reverse(y), t, t) == base
        assert delta_fast(y, x, t, t) == base


def test_scan_symmetry_reduction_is_lossless():
    for n in range(2, 9):
        for t in (1, 2, 3):
            if t >= n:
                continue
            with_sym = bucket_scan(n, t, symmetry=True, use_cache=False)
            without = bucket_scan(n, t, symmetry=False, use_cache=False)
            assert with_sym == without


def test_scan_gap_symmetry_reduction_is_lossless():
    for n in (3, 5, 7):
        for k in (1, 2):
            a = bucket_scan(n, 1, k=k, symmetry=True, use_cache=False)
            b = bucket_scan(n, 1, k=k, symmetry=False, use_cache=False)
            assert a == b


def test_scan_is_deterministic_across_job_counts():
    base = bucket_scan(7, 2, use_cache=False)
    for jobs in (2, 3, 8):
        assert bucket_scan(7, 2, jobs=jobs, use_cache=False) == base


def test_overlap_table_matches_bucket_scan():
    table = overlap_table_scan(7, 1)
    assert table.definition_violations == 0
    for t in (0, 1, 2, 3):
        buckets = bucket_scan(7, t, k=1)
        for d in range(8):
            assert table.best[d][t] == buckets.best[d]


def test_verify_bound_examples():
    report = verify_overlap_bound(1, 0, 0, 6)
    assert report.ok
    assert all(r.max_delta == 0 for r in report.rows)
    report = verify_overlap_bound(2, 2, 0, 8)
    assert report.ok
    assert max(r.max_delta for r in report.rows) == 6
    report = verify_overlap_bound(1, 1, 1, 6)
    assert report.ok
    assert all(r.bound == 3 for r in report.rows)
    assert report.tightest is not None and report.tightest.max_delta == 3


def test_verify_bound_budget_guard():
    with pytest.raises(BudgetError):
        verify_overlap_bound(1, 1, 2, 13)


def test_recurrence_report_smallest_floor():
    report = recurrence_report(1, 1, 4, 9)
    assert report.all_agree
    for row in report.rows:
        assert row.lhs == 2
        assert row.shorter2_smaller_radius == 0  # radius below the floor contributes zero


def test_recurrence_report_validation():
    with pytest.raises(ValueError):
        recurrence_report(0, 1, 4, 8)
    with pytest.raises(ValueError):
        recurrence_report(1, 2, 3, 8)


def test_corollary_cap_values():
    # the distance-floor-equals-radius value is the central binomial
    for n in range(6, 12):
        assert compute_n_exhaustive(NQuery(n, 2, 2)).value == 6
    for n in range(10, 13):
        assert compute_n_exhaustive(NQuery(n, 3, 3)).value == comb(6, 3)


def test_sandwich_and_table_roundtrip(tmp_path):
    table, violations = build_table(7, 3)
    assert violations == []
    for entry in table.rows():
        assert entry.value <= overlap_upper_bound(entry.n, entry.ell, entry.t, 0)
        if entry.ell >= 1 and entry.n >= 4 * entry.ell - 2 and entry.t >= entry.ell:
            assert entry.value >= overlap_lower_bound(entry.n, entry.ell, entry.t)
    gaps = table.monotone_gaps()
    assert isinstance(gaps, list)  # report only; no assertion on contents
    path = tmp_path / "table.csv"
    table.to_csv(path)
    again = NTable.from_csv(path)
    assert again.entries == table.entries


def test_ntable_rejects_foreign_csv(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n1,2\n")
    with pytest.raises(ValueError):
        NTable.from_csv(path)


def test_formula_matches_search_spot():
    assert compute_n_exhaustive(NQuery(8, 2, 3)).value == n_formula_dist2(8, 3) == 18
    assert compute_n_exhaustive(NQuery(10, 1, 3)).value == n_formula_dist1(10, 3) == 44


def _brute_max_overlap(n, ell, t, k):
    # kernel-free oracle: python distance plus enumeration intersections
    best = -1
    for xb in range(1 << n):
        x = Word(n, xb)
        for yb in range(xb if k == 0 else 0, 1 << (n + k)):
            y = Word(n + k, yb)
            if deletion_distance(x, y).value >= ell:
                best = max(best, intersection_size(x, y, t, t + k).size)
    return best


def test_scan_matches_kernel_free_oracle():
    for n in range(2, 7):
        for k in (0, 1):
            for t in range(1, min(n - 1, 3) + 1):
                for ell in range(0, t + 1):
                    got = compute_n_exhaustive(NQuery(n, ell, t, k)).value
                    assert got == _brute_max_overlap(n, ell, t, k), (n, ell, t, k)


def test_gap_mode_argmax_is_valid():
    entry = compute_n_exhaustive(NQuery(6, 2, 2, k=2))
    x, y = entry.argmax
    assert (x.length, y.length) == (6, 8)
    assert deletion_distance(x, y).value >= 2
    assert intersection_size(x, y, 2, 4).size == entry.value
