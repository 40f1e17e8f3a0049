import math
from fractions import Fraction

import pytest

from partdens.constructions import (
    LowerFamilyParams,
    UpperFamilyParams,
    build_lower_set,
    build_upper_set,
    default_lower_n0,
    density_profile,
    gap_region,
    lemma_region,
    lower_blocks,
    upper_blocks,
)
from partdens.partset import PartSet


def test_lower_examples():
    assert build_lower_set(LowerFamilyParams(0.5, 4, 8)).intervals == ((1, 2), (4, 8))
    assert build_lower_set(LowerFamilyParams(0.1, 20, 19)).intervals == ((1, 2),)


def test_lower_rejects_small_n0():
    with pytest.raises(ValueError):
        LowerFamilyParams(0.5, 2, 10)
    with pytest.raises(ValueError):
        LowerFamilyParams(1.5, 4, 10)


def test_lower_block_starts_are_members():
    p = LowerFamilyParams(Fraction(1, 8), 10, 10**9)
    A = build_lower_set(p)
    for i in range(1, 4):
        assert p.f(i - 1) in A
    assert [p.f(i) for i in range(4)] == [1, 10, 100, 10**4]


def test_lower_contains_consecutive_when_first_block_long():
    A = build_lower_set(LowerFamilyParams(Fraction(1, 4), 12, 10**5))
    assert 1 in A and 2 in A


def test_default_n0():
    assert default_lower_n0(Fraction(1, 4)) == 16
    assert default_lower_n0(Fraction(1, 32)) == 64
    p = LowerFamilyParams.with_default_n0(0.01, 10**6)
    assert p.n0 == 200 and p.n0 > 100


def test_upper_examples():
    # [2,2] ∪ [3,4] is the single normalized interval [2,4]
    assert build_upper_set(UpperFamilyParams(0.5, 20)).intervals == ((2, 4), (9, 16))
    assert build_upper_set(UpperFamilyParams(0.5, 3)).intervals == ((2, 3),)
    assert upper_blocks(UpperFamilyParams(0.5, 20)) == [(2, 2), (3, 4), (9, 16)]


def test_upper_lazy_growth():
    p = UpperFamilyParams(Fraction(1, 2), 10**5)
    assert p.checkpoints() == [2, 4, 16, 65536]
    blocks = upper_blocks(p)
    # next block would start past 2^65535, never built
    assert blocks[-1] == (32769, 65536)
    assert build_upper_set(p).max == 65536
    big = UpperFamilyParams(Fraction(1, 3), 10**50)
    assert big.checkpoints()[-1] <= 10**50
    assert build_upper_set(big).max <= 10**50


def test_upper_rejects():
    with pytest.raises(ValueError):
        UpperFamilyParams(0, 10)
    with pytest.raises(ValueError):
        UpperFamilyParams(0.25, 3)


def test_density_examples():
    (d,) = density_profile(PartSet.interval(1, 10), [10])
    assert d.density == 1.0
    (d,) = density_profile(build_lower_set(LowerFamilyParams(0.5, 4, 8)), [4], cap=8)
    assert (d.prefix_count, d.density) == (3, 0.75)
    (d,) = density_profile(build_upper_set(UpperFamilyParams(0.5, 20)), [16], cap=20)
    assert (d.prefix_count, d.density) == (11, 11 / 16)


def test_density_rejects_beyond_cap():
    with pytest.raises(ValueError):
        density_profile(PartSet.interval(1, 10), [11], cap=10)
    with pytest.raises(ValueError):
        density_profile(PartSet.interval(1, 10), [0])


def test_density_profile_monotone():
    A = build_lower_set(LowerFamilyParams(Fraction(1, 16), 32, 10**6))
    prof = density_profile(A, range(1, 5000, 7), cap=10**6)
    counts = [d.prefix_count for d in prof]
    assert counts == sorted(counts)
    assert all(0 <= d.density <= 1 for d in prof)


def test_lower_density_at_checkpoints():
    p = LowerFamilyParams(Fraction(1, 16), 32, 10**12)
    A = build_lower_set(p)
    for i in range(2, 4):
        (d,) = density_profile(A, [p.f(i)], cap=p.cap)
        assert abs(Fraction(d.prefix_count, d.n) - p.alpha) <= Fraction(2, p.f(i - 1))


def test_lower_density_at_block_ends_grows():
    p = LowerFamilyParams(Fraction(1, 16), 32, 10**12)
    A = build_lower_set(p)
    ends = [b for _, b in lower_blocks(p)[1:] if b <= p.cap]
    dens = [d.density for d in density_profile(A, ends, cap=p.cap)]
    assert dens == sorted(dens) and dens[-1] > 0.99


def test_upper_density():
    p = UpperFamilyParams(Fraction(1, 2), 10**5)
    A = build_upper_set(p)
    for d in density_profile(A, p.checkpoints(), cap=p.cap):
        assert abs(d.density - 0.5) <= 2 * math.log2(d.n) / d.n
    # just below the next block the density has collapsed
    (d,) = density_profile(A, [32768], cap=p.cap)
    assert d.density < 0.001


def test_gap_region():
    # 16 alpha n^2 = 256 and alpha n^4 / 16 = 256 at alpha=1/16, n=16
    assert lemma_region(Fraction(1, 16), 16) == (256, 256)
    lo, hi = lemma_region(0.5, 2)
    assert lo == 32 and lo > hi
    p = LowerFamilyParams(Fraction(1, 32), 64, 10**6)
    assert gap_region(p, 1) == (2048, 32768)
    assert gap_region(p, 1) == lemma_region(p.alpha, p.f(1))
    # scaling n -> 2n multiplies the ends by 4 and 16
    lo1, hi1 = lemma_region(Fraction(1, 16), 64)
    lo2, hi2 = lemma_region(Fraction(1, 16), 128)
    assert (lo2, hi2) == (4 * lo1, 16 * hi1)
