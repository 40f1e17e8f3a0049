import itertools
import math

import pytest
from hypothesis import given
import hypothesis.strategies as st

from partdens.core import (
    LogMag,
    brute_force_count,
    count_exact_parts,
    count_partitions,
    count_parts_leq,
    count_restricted,
    count_table,
    enumerate_partitions,
    exact_parts_table,
    hardy_ramanujan_log,
    log_count_restricted,
    log_count_table,
    partition_numbers,
    stars_and_bars,
)
from partdens.partset import PartSet, parse_set

from conftest import small_sets

ALL = PartSet.interval


# -- worked examples -------------------------------------------------------


@pytest.mark.parametrize("n,expected", [(0, 1), (4, 5), (10, 42)])
def test_count_partitions_examples(n, expected):
    assert count_partitions(n) == expected


def test_p100_published_value():
    # OEIS A000041
    assert count_partitions(100) == 190569292


@pytest.mark.parametrize("A,n,expected", [("1-2", 4, 3), ("2", 3, 0), ("", 0, 1)])
def test_count_restricted_examples(A, n, expected):
    assert count_restricted(parse_set(A), n) == expected


@pytest.mark.parametrize("n,k,expected", [(4, 2, 2), (9, 1, 1), (3, 5, 0), (0, 0, 1), (5, 0, 0)])
def test_count_exact_parts_examples(n, k, expected):
    assert count_exact_parts(n, k) == expected


def test_count_parts_leq_examples():
    assert count_parts_leq(2, 4) == 3
    assert count_parts_leq(1, 7) == 1
    assert count_parts_leq(2, 4) == count_exact_parts(6, 2) == 3
    with pytest.raises(ValueError):
        count_parts_leq(0, 3)


def test_log_count_examples():
    assert float(log_count_restricted(parse_set("1"), 1000)) == 0.0
    assert log_count_restricted(parse_set("1-2"), 100).value == pytest.approx(math.log(51), rel=1e-12)
    exact = count_restricted(ALL(1, 50), 500)
    assert log_count_restricted(ALL(1, 50), 500).value == pytest.approx(math.log(exact), rel=1e-6)
    assert log_count_restricted(parse_set("2"), 3).is_zero


def test_hardy_ramanujan_examples():
    assert hardy_ramanujan_log(6) == pytest.approx(2 * math.pi - math.log(24 * math.sqrt(3)), rel=1e-14)
    assert hardy_ramanujan_log(100) == pytest.approx(19.11, abs=0.01)
    assert math.log(count_partitions(100)) == pytest.approx(19.066, abs=0.001)
    with pytest.raises(ValueError):
        hardy_ramanujan_log(0)


@pytest.mark.parametrize("s,v,expected", [(4, 2, 5), (0, 7, 1), (5, 3, 21)])
def test_stars_and_bars_examples(s, v, expected):
    assert stars_and_bars(s, v) == expected


@pytest.mark.parametrize("s,v", [(0, 1), (3, 1), (4, 3), (6, 4), (2, 5)])
def test_stars_and_bars_enumeration(s, v):
    sols = sum(1 for xs in itertools.product(range(s + 1), repeat=v) if sum(xs) == s)
    assert stars_and_bars(s, v) == sols


def test_brute_force_examples():
    assert brute_force_count(parse_set("1,3"), 7) == 3
    assert brute_force_count(ALL(1, 7), 7) == 15
    assert brute_force_count(parse_set("5"), 4) == 0
    assert sorted(enumerate_partitions(parse_set("1,3"), 7)) == [(1,) * 7, (3, 1, 1, 1, 1), (3, 3, 1)]
    with pytest.raises(ValueError):
        brute_force_count(ALL(1, 5), 61)
    assert brute_force_count(parse_set("5"), 70, cap=80) == 1


def test_negative_inputs_rejected():
    with pytest.raises(ValueError):
        count_table(ALL(1, 3), -1)
    with pytest.raises(ValueError):
        brute_force_count(ALL(1, 3), -1)


# -- LogMag ------------------------------------------------------------------


def test_logmag_sentinel_ordering():
    z = LogMag.zero()
    assert z.is_zero and LogMag.of(0) == z
    assert z < LogMag.of(1) < LogMag.of(2)
    assert z != LogMag(float("-1e300"))
    assert z < LogMag(-1e300)
    assert float(z) == -math.inf
    assert LogMag.from_float(-math.inf) == z
    with pytest.raises(ValueError):
        LogMag.of(-1)


@given(st.integers(1, 2**53 - 1))
def test_logmag_roundtrip(c):
    back = math.exp(LogMag.of(c).value)
    assert abs(back - c) <= 1e-12 * c * max(1.0, math.log(c))


# -- properties --------------------------------------------------------------


def test_pentagonal_matches_dp():
    pn = partition_numbers(2000)
    tab = count_table(ALL(1, 2000), 2000)
    assert all(pn[n] == tab[n] for n in range(2001))


def test_count_partitions_matches_brute_force():
    pn = partition_numbers(25)
    assert pn == [brute_force_count(ALL(1, max(n, 1)), n) for n in range(26)]


@given(small_sets(20), st.integers(0, 25))
def test_oracle_equivalence(A, n):
    assert count_restricted(A, n) == brute_force_count(A, n)


@given(small_sets(40), st.integers(0, 40))
def test_prefix_locality(A, n):
    assert count_restricted(A, n) == count_restricted(A.clip(1, n), n)


@given(small_sets(30))
def test_monotone_when_one_present(A):
    A = A | PartSet.interval(1, 1)
    tab = count_table(A, 60)
    assert all(tab[i] <= tab[i + 1] for i in range(60))


def test_exact_parts_against_enumeration():
    T = exact_parts_table(22, 22)
    for n in range(23):
        by_len = [0] * 23
        for p in enumerate_partitions(ALL(1, max(n, 1)), n):
            by_len[len(p)] += 1
        assert [T[k][n] for k in range(23)] == by_len


def test_shift_identity_sweep():
    T = exact_parts_table(72, 12)
    for k in range(1, 13):
        tab = count_table(ALL(1, k), 60)
        assert all(tab[n] == T[k][n + k] for n in range(61))


@given(small_sets(60), st.integers(0, 300))
def test_log_engine_fidelity(A, n):
    exact = count_restricted(A, n)
    lg = log_count_restricted(A, n)
    if exact == 0:
        assert lg.is_zero
    else:
        ref = math.log(exact)
        assert abs(lg.value - ref) <= 1e-6 * max(1.0, ref)


def test_log_engine_fidelity_large():
    # wide sets exercise both accumulation paths
    for A in (ALL(1, 3000), parse_set("1,5-40,900-2500"), parse_set("7,11,13")):
        exact = count_table(A, 3000)
        logs = log_count_table(A, 3000)
        for n in range(0, 3001, 37):
            if exact[n] == 0:
                assert logs[n] == -math.inf
            else:
                ref = math.log(exact[n])
                assert abs(logs[n] - ref) <= 1e-6 * max(1.0, ref)


def test_log_engine_huge_counts():
    A = ALL(1, 1000)
    assert log_count_restricted(A, 20_000).value == pytest.approx(math.log(count_restricted(A, 20_000)), rel=1e-9)


@pytest.mark.slow
def test_log_engine_beyond_float_range():
    # p(80000) > 1.8e308, the largest double
    ref = math.log(partition_numbers(80_000)[80_000])
    assert ref > math.log(1.7976931348623157e308)
    lg = log_count_restricted(ALL(1, 80_000), 80_000)
    assert lg.value == pytest.approx(ref, rel=1e-9)
