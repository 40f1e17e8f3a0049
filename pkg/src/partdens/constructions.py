"""The two extremal set families: sparse-but-dense-at-the-bottom (lower
density ``alpha``) and top-heavy blocks (upper density ``beta``).

Real parameters are converted with ``Fraction`` so every floored endpoint is
exact, even when ``f(i)`` is far beyond float range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._exact import as_fraction
from .partset import PartSet


def default_lower_n0(alpha) -> int:
    return max(math.ceil(2 / as_fraction(alpha)), 16)


@dataclass(frozen=True)
class LowerFamilyParams:
    """``f(0)=1, f(1)=n0, f(i+1)=f(i)^2``; blocks ``[f(i-1), floor(alpha*f(i))]``."""

    alpha: float | Fraction
    n0: int
    cap: int

    def __post_init__(self):
        a = as_fraction(self.alpha)
        if not 0 < a < 1:
            raise ValueError("alpha must lie in (0, 1)")
        if self.n0 <= 1 / a:
            raise ValueError(f"n0={self.n0} must exceed 1/alpha={float(1 / a):.6g}")
        if self.cap < 1:
            raise ValueError("cap must be positive")

    @classmethod
    def with_default_n0(cls, alpha, cap: int) -> LowerFamilyParams:
        return cls(alpha, default_lower_n0(alpha), cap)

    def f(self, i: int) -> int:
        if i < 0:
            raise ValueError("index must be nonnegative")
        if i == 0:
            return 1
        v = self.n0
        for _ in range(i - 1):
            v *= v
        return v


@dataclass(frozen=True)
class UpperFamilyParams:
    """``f(0)=ceil(1/beta), f(i+1)=2^f(i)``; blocks ``[floor((1-beta)f(i))+1, f(i)]``."""

    beta: float | Fraction
    cap: int

    def __post_init__(self):
        b = as_fraction(self.beta)
        if not 0 < b < 1:
            raise ValueError("beta must lie in (0, 1)")
        if self.cap < self.n0:
            raise ValueError(f"cap={self.cap} must be at least n0={self.n0}")

    @property
    def n0(self) -> int:
        return math.ceil(1 / as_fraction(self.beta))

    def checkpoints(self) -> list[int]:
        """``f(0), f(1), ...`` while ``f(i) <= cap``; never builds the next huge power."""
        out = [self.n0]
        # 2^f > cap as soon as f reaches cap's bit length
        while out[-1] < self.cap.bit_length():
            nxt = 1 << out[-1]
            if nxt > self.cap:
                break
            out.append(nxt)
        return out


def lower_blocks(p: LowerFamilyParams) -> list[tuple[int, int]]:
    """Unclipped blocks ``(f(i-1), floor(alpha f(i)))`` whose start is within cap."""
    alpha = as_fraction(p.alpha)
    blocks = []
    prev, cur = 1, p.n0
    while prev <= p.cap:
        blocks.append((prev, math.floor(alpha * cur)))
        prev, cur = cur, cur * cur
    return blocks


def build_lower_set(p: LowerFamilyParams) -> PartSet:
    return PartSet.from_intervals((a, min(b, p.cap)) for a, b in lower_blocks(p))


def upper_blocks(p: UpperFamilyParams) -> list[tuple[int, int]]:
    """Blocks ``(floor((1-beta) f(i)) + 1, f(i))`` whose start is within cap (tops unclipped)."""
    beta = as_fraction(p.beta)
    # start of the block for f exceeds cap once (1-beta) 2^f > cap
    fmax = p.cap.bit_length() + math.ceil(math.log2(1 / (1 - beta))) + 1
    blocks = []
    f = p.n0
    while True:
        lo = math.floor((1 - beta) * f) + 1
        if lo > p.cap:
            break
        blocks.append((lo, f))
        if f > fmax:
            break
        f = 1 << f
    return blocks


def build_upper_set(p: UpperFamilyParams) -> PartSet:
    return PartSet.from_intervals((a, min(b, p.cap)) for a, b in upper_blocks(p))


@dataclass(frozen=True)
class DensitySample:
    n: int
    prefix_count: int
    density: float


def density_profile(A: PartSet, checkpoints, cap: int | None = None) -> list[DensitySample]:
    """Exact prefix counts of ``A`` at each checkpoint.

    ``cap`` is the range ``A`` was materialized over; checkpoints past it
    are rejected since the prefix there is unknown.
    """
    out = []
    for n in checkpoints:
        if n < 1:
            raise ValueError("checkpoints must be positive")
        if cap is not None and n > cap:
            raise ValueError(f"checkpoint {n} is beyond the materialized range {cap}")
        c = A.prefix_count(n)
        out.append(DensitySample(n, c, c / n))
    return out


def gap_region(p: LowerFamilyParams, i: int) -> tuple[int, int]:
    """``[ceil(16 alpha f(i+1)), floor(alpha f(i+2) / 16)]`` with ``n = f(i)``.

    Empty when ``lo > hi``; callers check that.
    """
    alpha = as_fraction(p.alpha)
    lo = math.ceil(16 * alpha * p.f(i + 1))
    hi = math.floor(alpha * p.f(i + 2) / 16)
    return lo, hi


def lemma_region(alpha, n: int) -> tuple[int, int]:
    """Same region expressed directly in ``n``: ``[16 alpha n^2, alpha n^4 / 16]``."""
    a = as_fraction(alpha)
    return math.ceil(16 * a * n * n), math.floor(a * n**4 / 16)
