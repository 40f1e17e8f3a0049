"""Binary entropy and the two auxiliary functions used in the interval bound."""

from __future__ import annotations

import math


def binary_entropy(x: float) -> float:
    """``H2(x)`` in bits, with ``H2(0) = H2(1) = 0``."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def f_beta(beta: float, gamma: float) -> float:
    if not 0.0 < beta < 1.0:
        raise ValueError("beta must lie in (0, 1)")
    if gamma <= 0.0:
        raise ValueError("gamma must be positive")
    a = beta * (1.0 - beta)
    return binary_entropy(gamma / (gamma + a)) * (gamma / (1.0 - beta) + beta) / math.sqrt(gamma)


def f_beta_peak_value(beta: float) -> float:
    """``2 sqrt(beta / (1 - beta))``, the value at ``gamma = beta (1 - beta)``."""
    return 2.0 * math.sqrt(beta / (1.0 - beta))


def g_a(a: float, x: float) -> float:
    """``a log2(a/(a+x)) - x log2(x/(a+x))``; positive on ``(0, a)``, negative past ``a``."""
    if a <= 0.0 or x <= 0.0:
        raise ValueError("a and x must be positive")
    s = a + x
    return a * math.log2(a / s) - x * math.log2(x / s)
