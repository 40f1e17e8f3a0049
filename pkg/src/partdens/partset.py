"""Finite sets of positive integers stored as sorted disjoint intervals."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True)
class PartSet:
    """Union of inclusive integer intervals ``[a, b]`` with ``1 <= a <= b``.

    Intervals are normalized on construction: sorted, overlapping or
    adjacent intervals merged, so consecutive intervals differ by at least
    two. Use :meth:`from_intervals` or :meth:`from_elements` rather than
    passing unnormalized data to the constructor.
    """

    intervals: tuple[tuple[int, int], ...] = ()
    _starts: tuple[int, ...] = field(default=(), repr=False, compare=False)
    _cum: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        prev_hi = None
        for a, b in self.intervals:
            if not (isinstance(a, int) and isinstance(b, int)):
                raise TypeError("interval endpoints must be int")
            if a < 1 or a > b:
                raise ValueError(f"invalid interval [{a}, {b}]")
            if prev_hi is not None and a <= prev_hi + 1:
                raise ValueError("intervals must be sorted, disjoint and non-adjacent")
            prev_hi = b
        cum = [0]
        for a, b in self.intervals:
            cum.append(cum[-1] + b - a + 1)
        object.__setattr__(self, "_starts", tuple(a for a, _ in self.intervals))
        object.__setattr__(self, "_cum", tuple(cum))

    @classmethod
    def from_intervals(cls, intervals: Iterable[tuple[int, int]]) -> PartSet:
        items = sorted((int(a), int(b)) for a, b in intervals if b >= a)
        merged: list[list[int]] = []
        for a, b in items:
            if a < 1:
                raise ValueError(f"elements must be positive, got interval [{a}, {b}]")
            if merged and a <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        return cls(tuple((a, b) for a, b in merged))

    @classmethod
    def from_elements(cls, elements: Iterable[int]) -> PartSet:
        return cls.from_intervals((x, x) for x in elements)

    @classmethod
    def interval(cls, a: int, b: int) -> PartSet:
        """``[a, b]``; empty when ``b < a``. ``a`` is clamped to 1."""
        a = max(a, 1)
        return cls(((a, b),)) if b >= a else cls()

    # -- queries ---------------------------------------------------------

    def __len__(self) -> int:
        return self._cum[-1]

    @property
    def size(self) -> int:
        return self._cum[-1]

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __contains__(self, x: int) -> bool:
        i = bisect.bisect_right(self._starts, x) - 1
        return i >= 0 and x <= self.intervals[i][1]

    def __iter__(self) -> Iterator[int]:
        for a, b in self.intervals:
            yield from range(a, b + 1)

    @property
    def min(self) -> int:
        if not self.intervals:
            raise ValueError("empty set has no minimum")
        return self.intervals[0][0]

    @property
    def max(self) -> int:
        if not self.intervals:
            raise ValueError("empty set has no maximum")
        return self.intervals[-1][1]

    def prefix_count(self, n: int) -> int:
        """``|A ∩ [1, n]|`` exactly."""
        i = bisect.bisect_right(self._starts, n) - 1
        if i < 0:
            return 0
        a, b = self.intervals[i]
        return self._cum[i] + min(b, n) - a + 1

    def iter_upto(self, n: int) -> Iterator[int]:
        for a, b in self.intervals:
            if a > n:
                return
            yield from range(a, min(b, n) + 1)

    def smallest(self, k: int) -> PartSet:
        """The ``k`` smallest elements."""
        out = []
        for a, b in self.intervals:
            if k <= 0:
                break
            take = min(k, b - a + 1)
            out.append((a, a + take - 1))
            k -= take
        return PartSet(tuple(out))

    def largest(self, k: int) -> PartSet:
        out = []
        for a, b in reversed(self.intervals):
            if k <= 0:
                break
            take = min(k, b - a + 1)
            out.append((b - take + 1, b))
            k -= take
        return PartSet(tuple(reversed(out)))

    # -- set algebra -----------------------------------------------------

    def clip(self, lo: int, hi: int | None = None) -> PartSet:
        """``A ∩ [lo, hi]`` (``hi=None`` means unbounded)."""
        out = []
        for a, b in self.intervals:
            a2 = max(a, lo)
            b2 = b if hi is None else min(b, hi)
            if a2 <= b2:
                out.append((a2, b2))
        return PartSet(tuple(out))

    def union(self, other: PartSet) -> PartSet:
        return PartSet.from_intervals(self.intervals + other.intervals)

    __or__ = union

    def __str__(self) -> str:
        if not self.intervals:
            return "{}"
        return ",".join(str(a) if a == b else f"{a}-{b}" for a, b in self.intervals)


def parse_set(text: str) -> PartSet:
    """Parse ``"1,3-5, 9"`` into a PartSet. Whitespace is ignored.

    An empty string (or ``"{}"``) is the empty set.
    """
    body = "".join(text.split())
    if body in ("", "{}"):
        return PartSet()
    spans = []
    for item in body.split(","):
        if not item:
            raise ValueError(f"empty item in set literal {text!r}")
        lo, sep, hi = item.partition("-")
        try:
            a = int(lo)
            b = int(hi) if sep else a
        except ValueError:
            raise ValueError(f"malformed set item {item!r}") from None
        if a < 1 or b < a:
            raise ValueError(f"bad range {item!r}: need 1 <= a <= b")
        spans.append((a, b))
    return PartSet.from_intervals(spans)
