import math
from fractions import Fraction

import pytest

from partdens.constructions import LowerFamilyParams, UpperFamilyParams, build_lower_set, build_upper_set, gap_region
from partdens.core import count_restricted, partition_numbers
from partdens.partset import PartSet, parse_set
from partdens.ratio import geometric_samples, ratio_curve


def test_full_set_ratio_is_one():
    (s,) = ratio_curve(PartSet.interval(1, 10_000), 1, [10_000])
    assert s.ratio == pytest.approx(1.0, abs=1e-9)
    assert abs(s.ratio - 1) <= 0.15


def test_ratio_matches_exact_counts():
    A = parse_set("1,4-9,30")
    for s in ratio_curve(A, Fraction(1, 3), [60, 200, 401]):
        num = math.log(count_restricted(A, s.m))
        den = math.log(partition_numbers(s.m // 3)[s.m // 3])
        assert s.ratio == pytest.approx(num / den, rel=1e-9)
        assert not s.hr_estimate


def test_one_and_evens_trend():
    A = PartSet.from_elements([1] + list(range(2, 10_001, 2)))
    ms = [100, 300, 1000, 3000, 10_000]
    rs = [s.ratio for s in ratio_curve(A, 0.5, ms)]
    assert all(x > y for x, y in zip(rs, rs[1:]))
    assert all(r > 1 for r in rs)
    assert rs[-1] - 1 < rs[0] - 1


def test_zero_numerator_sentinel():
    (s,) = ratio_curve(parse_set("2"), 1, [5])
    assert s.log_pA.is_zero and s.ratio == -math.inf


def test_hr_estimate_beyond_exact_limit():
    (s,) = ratio_curve(parse_set("1-3"), 1, [30], exact_limit=20)
    assert s.hr_estimate


def test_rejects_bad_inputs():
    with pytest.raises(ValueError):
        ratio_curve(parse_set("1"), Fraction(1, 32), [32])  # floor(alpha m) = 1
    with pytest.raises(ValueError):
        ratio_curve(parse_set("1"), 0.5, [10], cap=5)
    with pytest.raises(ValueError):
        ratio_curve(parse_set("1"), 1.5, [10])
    assert ratio_curve(parse_set("1"), 0.5, []) == []


def test_lower_construction_above_one():
    p = LowerFamilyParams(Fraction(1, 16), 32, 4096)
    lo, hi = gap_region(p, 1)
    assert (lo, hi) == (1024, 4096)
    A = build_lower_set(p)
    assert all(s.ratio > 1 for s in ratio_curve(A, p.alpha, geometric_samples(lo, hi, 5), cap=p.cap))


def test_upper_construction_below_one_at_checkpoints():
    p = UpperFamilyParams(Fraction(1, 4), 70_000)
    A = build_upper_set(p)
    assert p.checkpoints() == [4, 16, 65536]
    curve = ratio_curve(A, p.beta, [16, 65536], cap=p.cap)
    assert all(s.ratio < 1 for s in curve)


def test_geometric_samples():
    pts = geometric_samples(2048, 32768, 9)
    assert pts[0] == 2048 and pts[-1] == 32768 and len(pts) == 9
    assert pts == sorted(set(pts))
    assert geometric_samples(5, 5, 3) == [5]
