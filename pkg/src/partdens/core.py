"""Exact and log-domain partition counting.

Counts are plain Python ints. Restricted counts ``p_A(n)`` come from the
coin-change recurrence run once per part; the unrestricted ``p(n)`` comes
from Euler's pentagonal recurrence. ``log_count_restricted`` runs the same
coin-change pass in log space for sizes where the exact integers get too
wide to be practical.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from math import comb

import numpy as np

from .partset import PartSet

DEFAULT_ORACLE_CAP = 60

# row loop beats a padded accumulate once a part spans few rows
_ROW_LOOP_MAX_ROWS = 48


@functools.total_ordering
@dataclass(frozen=True)
class LogMag:
    """Natural log of a nonnegative count; ``value=None`` encodes an exact zero."""

    value: float | None

    @classmethod
    def zero(cls) -> LogMag:
        return cls(None)

    @classmethod
    def of(cls, count: int) -> LogMag:
        if count < 0:
            raise ValueError("counts are nonnegative")
        return cls(None) if count == 0 else cls(math.log(count))

    @classmethod
    def from_float(cls, x: float) -> LogMag:
        """Map a raw log value (``-inf`` for zero) to a LogMag."""
        return cls(None) if x == -math.inf else cls(float(x))

    @property
    def is_zero(self) -> bool:
        return self.value is None

    def __float__(self) -> float:
        return -math.inf if self.value is None else self.value

    def __lt__(self, other):
        if not isinstance(other, LogMag):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        return other.value is not None and self.value < other.value

    def __str__(self) -> str:
        return "zero" if self.value is None else f"{self.value:.12g}"


# -- unrestricted p(n) ----------------------------------------------------


def partition_numbers(nmax: int) -> list[int]:
    """``[p(0), ..., p(nmax)]`` via the pentagonal number recurrence."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    # generalized pentagonals k(3k-1)/2 for k = 1, -1, 2, -2, ... with signs + + - -
    pents = []
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > nmax:
            break
        sign = 1 if k % 2 else -1
        pents.append((g1, sign))
        g2 = k * (3 * k + 1) // 2
        if g2 <= nmax:
            pents.append((g2, sign))
        k += 1
    p = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        total = 0
        for g, sign in pents:
            if g > n:
                break
            if sign > 0:
                total += p[n - g]
            else:
                total -= p[n - g]
        p[n] = total
    return p


def count_partitions(n: int) -> int:
    """Exact ``p(n)``; ``p(0) = 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return partition_numbers(n)[n]


# -- restricted p_A(n): exact ----------------------------------------------


def _add_part(f: np.ndarray, a: int) -> None:
    """In place: multiply the series in ``f`` by ``1/(1 - x^a)``."""
    size = len(f)
    if a >= size:
        return
    rows = -(-size // a)
    if rows > _ROW_LOOP_MAX_ROWS:
        padded = np.zeros(rows * a, dtype=f.dtype)
        padded[:size] = f
        acc = np.add.accumulate(padded.reshape(rows, a), axis=0)
        f[:] = acc.ravel()[:size]
        return
    for lo in range(a, size, a):
        hi = min(lo + a, size)
        f[lo:hi] += f[lo - a : hi - a]


def _remove_part(f: np.ndarray, a: int) -> None:
    """In place: multiply by ``1 - x^a`` (inverse of :func:`_add_part`)."""
    if a < len(f):
        f[a:] = f[a:] - f[:-a]


def count_table(A: PartSet, nmax: int) -> np.ndarray:
    """Object array ``[p_A(0), ..., p_A(nmax)]`` of exact ints."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    f = np.zeros(nmax + 1, dtype=object)
    f[0] = 1
    for a in A.iter_upto(nmax):
        _add_part(f, a)
    return f


def count_restricted(A: PartSet, n: int) -> int:
    """Exact ``p_A(n)``, the number of partitions of ``n`` with parts in ``A``."""
    return int(count_table(A, n)[n])


def count_parts_leq(k: int, n: int) -> int:
    """``p_[k](n)``: partitions of ``n`` with every part at most ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return count_restricted(PartSet.interval(1, k), n)


def exact_parts_table(nmax: int, kmax: int) -> list[list[int]]:
    """``T[k][n]`` = partitions of ``n`` into exactly ``k`` positive parts.

    Uses ``p_k(n) = p_k(n - k) + p_{k-1}(n - 1)`` (remove one from every
    part, or drop a part equal to one), independent of the coin-change DP.
    """
    T = [[0] * (nmax + 1) for _ in range(kmax + 1)]
    T[0][0] = 1
    for k in range(1, kmax + 1):
        row, prev = T[k], T[k - 1]
        for n in range(k, nmax + 1):
            row[n] = row[n - k] + prev[n - 1]
    return T


def count_exact_parts(n: int, k: int) -> int:
    """Partitions of ``n`` into exactly ``k`` positive parts; ``(0, 0) -> 1``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return 1 if n == k == 0 else 0
    return exact_parts_table(n, k)[k][n]


def stars_and_bars(s: int, nvars: int) -> int:
    """Nonnegative integer solutions of ``x_1 + ... + x_nvars = s``."""
    if s < 0 or nvars < 1:
        raise ValueError("need s >= 0 and nvars >= 1")
    return comb(s + nvars - 1, nvars - 1)


# -- restricted p_A(n): log domain -----------------------------------------


def _add_part_log(f: np.ndarray, a: int) -> None:
    size = len(f)
    if a >= size:
        return
    rows = -(-size // a)
    if rows > _ROW_LOOP_MAX_ROWS:
        padded = np.full(rows * a, -np.inf)
        padded[:size] = f
        acc = np.logaddexp.accumulate(padded.reshape(rows, a), axis=0)
        f[:] = acc.ravel()[:size]
        return
    for lo in range(a, size, a):
        hi = min(lo + a, size)
        np.logaddexp(f[lo:hi], f[lo - a : hi - a], out=f[lo:hi])


def log_count_table(A: PartSet, nmax: int) -> np.ndarray:
    """Float array of ``log p_A(n)`` for ``n = 0..nmax``; ``-inf`` marks zero.

    ``-inf`` only lives inside this array (``logaddexp`` treats it as an
    exact zero); public scalars go through :class:`LogMag`.
    """
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    f = np.full(nmax + 1, -np.inf)
    f[0] = 0.0
    for a in A.iter_upto(nmax):
        _add_part_log(f, a)
    return f


def log_count_restricted(A: PartSet, n: int) -> LogMag:
    return LogMag.from_float(float(log_count_table(A, n)[n]))


def hardy_ramanujan_log(n: int) -> float:
    """Log of ``exp(pi*sqrt(2n/3)) / (4 n sqrt 3)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.pi * math.sqrt(2 * n / 3) - math.log(4 * n * math.sqrt(3))


# -- brute-force oracle ---------------------------------------------------


def enumerate_partitions(A: PartSet, n: int):
    """Yield every partition of ``n`` with parts in ``A`` (non-increasing tuples)."""
    parts = sorted(A.iter_upto(n), reverse=True)

    def rec(rest, start, prefix):
        if rest == 0:
            yield tuple(prefix)
            return
        for i in range(start, len(parts)):
            a = parts[i]
            if a <= rest:
                prefix.append(a)
                yield from rec(rest - a, i, prefix)
                prefix.pop()

    yield from rec(n, 0, [])


def brute_force_count(A: PartSet, n: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Count partitions by exhaustive enumeration. Test oracle only."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise ValueError(f"n={n} exceeds oracle cap {cap}")
    return sum(1 for _ in enumerate_partitions(A, n))
