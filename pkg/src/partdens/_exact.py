"""Exact rational helpers shared by the construction and audit code."""

from __future__ import annotations

import math
from fractions import Fraction


def as_fraction(x) -> Fraction:
    """Exact rational for ``x``; floats go through their shortest repr, so 0.01 is 1/100."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def floor_sqrt(q: Fraction) -> int:
    return math.isqrt(math.floor(q)) if q > 0 else 0


def ceil_sqrt(q: Fraction) -> int:
    """Smallest integer ``L >= 0`` with ``L^2 >= q``."""
    c = math.ceil(q)
    return 0 if c <= 0 else math.isqrt(c - 1) + 1
