"""Ratio curves ``log p_A(m) / log p(floor(alpha m))``."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._exact import as_fraction
from .core import LogMag, hardy_ramanujan_log, log_count_table, partition_numbers
from .partset import PartSet

# largest floor(alpha m) evaluated with the exact pentagonal recurrence
EXACT_P_LIMIT = 20000


@dataclass(frozen=True)
class RatioSample:
    m: int
    log_pA: LogMag
    log_p_alpha_m: float
    ratio: float  # -inf marks p_A(m) = 0
    hr_estimate: bool = False


def ratio_curve(A: PartSet, alpha, m_samples, cap: int | None = None,
                exact_limit: int = EXACT_P_LIMIT) -> list[RatioSample]:
    """Sample the ratio at each ``m``; one log-domain pass covers all samples.

    The denominator is exact up to ``exact_limit`` and the Hardy-Ramanujan
    estimate beyond it (``hr_estimate=True``).
    """
    samples = [int(m) for m in m_samples]
    if not samples:
        return []
    a = as_fraction(alpha)
    if not 0 < a <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    if min(samples) < 1:
        raise ValueError("samples must be positive")
    if cap is not None and max(samples) > cap:
        raise ValueError(f"sample {max(samples)} beyond materialized cap {cap}")
    dens = [math.floor(a * m) for m in samples]
    bad = [m for m, d in zip(samples, dens) if d < 2]
    if bad:
        raise ValueError(f"p(floor(alpha m)) < 2 at m={bad[0]}; ratio undefined")
    logs = log_count_table(A, max(samples))
    exact_top = min(max(dens), exact_limit)
    pn = partition_numbers(exact_top)
    out = []
    for m, d in zip(samples, dens):
        if d <= exact_top:
            den, hr = math.log(pn[d]), False
        else:
            den, hr = hardy_ramanujan_log(d), True
        num = LogMag.from_float(float(logs[m]))
        ratio = -math.inf if num.is_zero else num.value / den
        out.append(RatioSample(m, num, den, ratio, hr))
    return out


def geometric_samples(lo: int, hi: int, count: int) -> list[int]:
    """``count`` distinct integers spread geometrically over ``[lo, hi]``."""
    if count < 2 or lo >= hi:
        return [lo]
    r = (hi / lo) ** (1 / (count - 1))
    pts = sorted({min(hi, max(lo, round(lo * r**j))) for j in range(count)} | {lo, hi})
    return pts
