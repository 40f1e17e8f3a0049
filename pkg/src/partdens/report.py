"""CSV emission and count formatting."""

from __future__ import annotations

import contextlib
import csv
import io
import math
import sys
from typing import Iterable

from .audits import BoundReport, SweepSummary
from .constructions import DensitySample
from .ratio import RatioSample

RATIO_SCHEMA = ("m", "log_pA", "log_p_alpha_m", "ratio")
DENSITY_SCHEMA = ("n", "prefix_count", "density")
AUDIT_SCHEMA = ("lemma_id", "params", "lhs_log", "rhs_log", "slack", "preconditions_met", "pass")

MAX_DECIMAL_DIGITS = 10_000


def fmt_real(x) -> str:
    if x is None:
        return ""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".12g")


def fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return format_count(v)
    if isinstance(v, float):
        return fmt_real(v)
    return str(v)


@contextlib.contextmanager
def _int_digits(limit: int):
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        yield
        return
    old = getter()
    sys.set_int_max_str_digits(0 if limit == 0 else max(limit, old) if old else 0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


def format_count(c: int) -> str:
    """Exact decimal up to 10^4 digits, otherwise ``e^<natural log>``."""
    if c < 0:
        return "-" + format_count(-c)
    # digit estimate can be off by one; only the boundary needs the exact count
    approx = int(c.bit_length() * math.log10(2)) + 1
    if approx <= MAX_DECIMAL_DIGITS + 1:
        with _int_digits(MAX_DECIMAL_DIGITS + 2):
            s = str(c)
        if len(s) <= MAX_DECIMAL_DIGITS:
            return s
    return f"e^{math.log(c):.12g}"


def ratio_rows(samples: Iterable[RatioSample]) -> list[dict]:
    return [
        {"m": s.m, "log_pA": float(s.log_pA), "log_p_alpha_m": s.log_p_alpha_m, "ratio": s.ratio}
        for s in samples
    ]


def density_rows(profile: Iterable[DensitySample]) -> list[dict]:
    return [{"n": d.n, "prefix_count": d.prefix_count, "density": d.density} for d in profile]


def audit_row(r: BoundReport | SweepSummary) -> dict:
    if isinstance(r, SweepSummary):
        t = r.tightest
        params = dict(r.params, checked=r.checked, failures=len(r.failures))
        if t is not None:
            params["tightest"] = "[" + t.params_str().replace(";", " ") + "]"
        return {
            "lemma_id": str(r.lemma_id),
            "params": ";".join(f"{k}={_param(v)}" for k, v in params.items()),
            "lhs_log": t.lhs_log if t else None,
            "rhs_log": t.rhs_log if t else None,
            "slack": t.slack if t else None,
            "preconditions_met": r.checked > 0,
            "pass": r.passed,
        }
    return {
        "lemma_id": str(r.lemma_id),
        "params": r.params_str(),
        "lhs_log": r.lhs_log,
        "rhs_log": r.rhs_log,
        "slack": r.slack,
        "preconditions_met": r.preconditions_met,
        "pass": r.passed,
    }


def _param(v) -> str:
    from fractions import Fraction

    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
    if isinstance(v, float):
        return fmt_real(v)
    return str(v)


def render_csv(rows: Iterable[dict], schema: tuple[str, ...]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(schema)
    for row in rows:
        if set(row) != set(schema):
            raise ValueError(f"row keys {sorted(row)} do not match schema {schema}")
        w.writerow([fmt_cell(row[c]) for c in schema])
    return buf.getvalue()


def emit_csv(rows: Iterable[dict], schema: tuple[str, ...], path) -> None:
    """Write rows as UTF-8 CSV with LF endings; ``path='-'`` means stdout."""
    text = render_csv(rows, schema)
    if str(path) == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
