"""``partdens`` command line.

Exit codes: 0 when every requested check passes, 1 when some check fails,
2 for usage or parameter errors (including unmet lemma preconditions).
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from . import audits as au
from .acceptance import run_acceptance
from .constructions import (
    LowerFamilyParams,
    UpperFamilyParams,
    build_lower_set,
    build_upper_set,
    default_lower_n0,
    density_profile,
)
from .core import (
    DEFAULT_ORACLE_CAP,
    brute_force_count,
    count_exact_parts,
    count_restricted,
    hardy_ramanujan_log,
    log_count_restricted,
    partition_numbers,
)
from .partset import PartSet, parse_set
from .ratio import geometric_samples, ratio_curve
from .report import (
    AUDIT_SCHEMA,
    DENSITY_SCHEMA,
    RATIO_SCHEMA,
    audit_row,
    density_rows,
    emit_csv,
    format_count,
    ratio_rows,
)

HR_SCHEMA = ("n", "log_p", "hr_log", "growth_ratio")


class UsageError(Exception):
    pass


def _int(text: str) -> int:
    """Integers, also written as ``1e6`` or ``10^6``."""
    t = text.strip()
    try:
        return int(t)
    except ValueError:
        pass
    try:
        if "^" in t:
            b, e = t.split("^")
            return int(b) ** int(e)
        v = Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v.denominator != 1:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(v)


def _real(text: str) -> Fraction:
    """Exact rational from ``0.25`` or ``1/4``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _set(text: str) -> PartSet:
    try:
        return parse_set(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _int_list(text: str) -> list[int]:
    return [_int(x) for x in text.split(",") if x.strip()]


def _need(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        raise UsageError(f"{args.cmd} needs " + ", ".join("--" + n for n in missing))


# -- subcommands -----------------------------------------------------------


def cmd_count(args) -> int:
    _need(args, "n")
    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    if args.k is not None and args.set is not None:
        raise UsageError("--k and --set are exclusive")
    if args.k is not None:
        if args.k < 0:
            raise UsageError("--k must be nonnegative")
        print(format_count(count_exact_parts(n, args.k)))
        return 0
    if args.oracle:
        if args.set is None:
            raise UsageError("--oracle needs --set")
        if n > args.oracle_cap:
            raise UsageError(f"--n {n} exceeds the oracle cap {args.oracle_cap}")
        print(format_count(brute_force_count(args.set, n, cap=args.oracle_cap)))
        return 0
    if args.log:
        A = args.set if args.set is not None else PartSet.interval(1, max(n, 1))
        print(log_count_restricted(A, n))
        return 0
    if args.set is None:
        print(format_count(partition_numbers(n)[n]))
    else:
        print(format_count(count_restricted(args.set, n)))
    return 0


def _family_set(args):
    if args.family == "lower":
        _need(args, "alpha", "cap")
        n0 = args.n0 if args.n0 is not None else default_lower_n0(args.alpha)
        p = LowerFamilyParams(args.alpha, n0, args.cap)
        pts, i = [], 1
        while p.f(i) <= p.cap:
            pts.append(p.f(i))
            i += 1
        return build_lower_set(p), pts, p.alpha
    _need(args, "beta", "cap")
    if args.n0 is not None:
        raise UsageError("--n0 applies to the lower family only")
    p = UpperFamilyParams(args.beta, args.cap)
    return build_upper_set(p), p.checkpoints(), p.beta


def cmd_construct(args) -> int:
    A, pts, _ = _family_set(args)
    if args.checkpoints is not None:
        pts = args.checkpoints
    if args.show_set:
        print(A)
        return 0
    emit_csv(density_rows(density_profile(A, pts, cap=args.cap)), DENSITY_SCHEMA, args.output)
    return 0


def _audit_reports(args) -> list:
    lemma = au.Lemma(args.lemma)
    L = au.Lemma
    sweep = None
    if lemma in (L.SHIFT_IDENTITY, L.PK_SANDWICH) and args.nmax is not None:
        _need(args, "kmax")
        fn = au.sweep_shift_identity if lemma is L.SHIFT_IDENTITY else au.sweep_pk_sandwich
        sweep = au.summarize(lemma, {"nmax": args.nmax, "kmax": args.kmax}, fn(args.nmax, args.kmax))
    elif lemma is L.SHIFT_BIJECTION and args.nmax is not None:
        _need(args, "Lmax", "kmax")
        sweep = au.summarize(lemma, {"Lmax": args.Lmax, "kmax": args.kmax, "nmax": args.nmax},
                             au.sweep_shift_bijection(args.Lmax, args.kmax, args.nmax))
    elif lemma is L.INTERVAL_UPPER and args.nmax is not None:
        _need(args, "beta", "mmax")
        if not 0 < args.beta < 1:
            raise UsageError("--beta must lie in (0, 1)")
        sweep = au.sweep_interval_upper(args.beta, args.nmax, args.mmax)
    elif lemma is L.ENTROPY_BINOMIAL and args.nmax is not None:
        sweep = au.summarize(lemma, {"nmax": args.nmax},
                             (au.entropy_binomial_bound(n, k) for n in range(1, args.nmax + 1) for k in range(n + 1)))
    if sweep is not None:
        if sweep.checked == 0:
            raise UsageError("the sweep contains no case with its preconditions met")
        return [sweep]

    if lemma is L.TRIVIAL_BOUND:
        _need(args, "set", "n")
        return [au.audit_trivial_bound(args.set, args.n)]
    if lemma is L.PK_SANDWICH:
        _need(args, "n", "k")
        return [au.audit_pk_sandwich(args.n, args.k)]
    if lemma is L.SHIFT_IDENTITY:
        _need(args, "n", "k")
        return [au.audit_shift_identity(args.n, args.k)]
    if lemma is L.FIRST_IS_BEST:
        _need(args, "set", "n")
        return [au.audit_first_is_best(args.set, args.n)]
    if lemma is L.STARS_BARS_INJECTION:
        _need(args, "n", "K", "s", "m")
        return [au.stars_bars_injection_bound(args.n, args.K, args.s, args.m)]
    if lemma is L.CONVOLUTION_SPLIT:
        _need(args, "set", "t", "m")
        return [au.audit_convolution_split(args.set, args.t, args.m)]
    if lemma is L.LIMINF_LOWER_MAIN:
        _need(args, "alpha", "n", "m")
        return [au.audit_liminf_lower_main(args.alpha, args.n, args.m)]
    if lemma is L.CONSTRUCTION_SPLIT:
        _need(args, "set", "alpha", "n", "m")
        if not 0 < args.alpha < 1:
            raise UsageError("--alpha must lie in (0, 1)")
        return au.sweep_construction_split(args.set, args.alpha, args.n, [args.m], delta=args.delta)
    if lemma is L.SZEKERES:
        _need(args, "gamma", "n")
        return [au.audit_szekeres(args.gamma, args.n)]
    if lemma is L.SHIFT_BIJECTION:
        _need(args, "L", "k", "n")
        return [au.shift_bijection_bound(args.L, args.k, args.n)]
    if lemma is L.DIXMIER_NICOLAS_UPPER:
        _need(args, "lambda_", "n")
        return [au.audit_dixmier_nicolas_upper(args.lambda_, args.n)]
    if lemma is L.DIXMIER_NICOLAS_LOWER:
        _need(args, "lambda_", "n")
        return [au.audit_dixmier_nicolas_lower(args.lambda_, args.n)]
    if lemma is L.LIMINF_UPPER_MAIN:
        _need(args, "set", "alpha", "n")
        return [au.audit_liminf_upper_main(args.set, args.alpha, args.n)]
    if lemma is L.PIGEONHOLE:
        _need(args, "set", "m")
        return [au.audit_pigeonhole(args.set, args.m)]
    if lemma is L.INTERVAL_UPPER:
        _need(args, "beta", "n", "m")
        return [au.audit_interval_upper(args.beta, args.n, args.m)]
    if lemma is L.ENTROPY_BINOMIAL:
        _need(args, "n", "k")
        return [au.entropy_binomial_bound(args.n, args.k)]
    if lemma is L.FBETA_PEAK:
        _need(args, "beta")
        if not 0 < args.beta < 1:
            raise UsageError("--beta must lie in (0, 1)")
        return [au.audit_fbeta_peak(float(args.beta))]
    raise UsageError(f"unhandled lemma {lemma}")  # pragma: no cover


def cmd_audit(args) -> int:
    reports = _audit_reports(args)
    unmet = [r for r in reports if isinstance(r, au.BoundReport) and not r.preconditions_met]
    if unmet:
        r = unmet[0]
        bad = [k for k, v in r.conditions.items() if not v]
        raise UsageError(f"preconditions of {r.lemma_id} not met at {r.params_str()}: " + ", ".join(bad))
    emit_csv([audit_row(r) for r in reports], AUDIT_SCHEMA, args.output)
    return 0 if all(r.passed for r in reports) else 1


def cmd_ratio(args) -> int:
    if args.set is not None:
        if args.family is not None:
            raise UsageError("--set and --family are exclusive")
        _need(args, "alpha")
        A, alpha = args.set, args.alpha
        cap = args.cap
    else:
        if args.family is None:
            raise UsageError("ratio needs --set or --family")
        A, _, alpha = _family_set(args)
        cap = args.cap
    if args.samples is not None:
        ms = args.samples
    else:
        _need(args, "m_lo", "m_hi")
        ms = geometric_samples(args.m_lo, args.m_hi, args.count)
    if not 0 < alpha <= 1:
        raise UsageError("density parameter must lie in (0, 1]")
    emit_csv(ratio_rows(ratio_curve(A, alpha, ms, cap=cap)), RATIO_SCHEMA, args.output)
    return 0


def cmd_hr(args) -> int:
    ns = args.n_list
    if any(n < 1 for n in ns):
        raise UsageError("--n values must be positive")
    pn = partition_numbers(max(ns))
    rows = [{
        "n": n,
        "log_p": math.log(pn[n]),
        "hr_log": hardy_ramanujan_log(n),
        "growth_ratio": math.log(pn[n]) / (math.pi * math.sqrt(2 * n / 3)),
    } for n in ns]
    emit_csv(rows, HR_SCHEMA, args.output)
    return 0


def cmd_verify_all(args) -> int:
    run = run_acceptance(threads=args.threads, determinism=not args.skip_determinism)
    log = sys.stderr if str(args.output) == "-" else sys.stdout
    for r in run.results:
        print(r.line(), file=log)
    if str(args.output) == "-":
        sys.stdout.write(run.csv_text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(run.csv_text)
    print("verify-all: " + ("PASS" if run.passed else "FAIL"), file=log)
    return 0 if run.passed else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_int, default=1, help="worker threads (default 1)")
    common.add_argument("--output", "-o", default="-", help="CSV destination, '-' for stdout")

    ap = argparse.ArgumentParser(prog="partdens", description="Restricted partition counts and density bounds.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("count", parents=[common], help="exact partition counts")
    c.add_argument("--n", type=_int)
    c.add_argument("--set", type=_set, help="allowed parts, e.g. '1-3,7'")
    c.add_argument("--k", type=_int, help="count partitions into exactly k parts")
    c.add_argument("--log", action="store_true", help="natural log via the log-domain engine")
    c.add_argument("--oracle", action="store_true", help="count by brute-force enumeration")
    c.add_argument("--oracle-cap", type=_int, default=DEFAULT_ORACLE_CAP)
    c.set_defaults(func=cmd_count)

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", choices=["lower", "upper"])
    fam.add_argument("--alpha", type=_real)
    fam.add_argument("--beta", type=_real)
    fam.add_argument("--n0", type=_int)
    fam.add_argument("--cap", type=_int)

    k = sub.add_parser("construct", parents=[common, fam], help="density profile of a construction")
    k.add_argument("--checkpoints", type=_int_list, help="override the generated checkpoints")
    k.add_argument("--show-set", action="store_true", help="print the set instead of the CSV")
    k.set_defaults(func=cmd_construct, family_required=True)

    a = sub.add_parser("audit", parents=[common], help="audit one bound or sweep a grid")
    a.add_argument("--lemma", required=True, choices=[m.value for m in au.Lemma])
    a.add_argument("--set", type=_set)
    for name in ("n", "m", "k", "t", "K", "s", "L", "nmax", "mmax", "kmax", "Lmax"):
        a.add_argument(f"--{name}", type=_int)
    for name in ("alpha", "beta", "gamma", "delta"):
        a.add_argument(f"--{name}", type=_real)
    a.add_argument("--lambda", dest="lambda_", type=_real)
    a.set_defaults(func=cmd_audit)

    r = sub.add_parser("ratio", parents=[common, fam], help="ratio curve log p_A(m) / log p(floor(alpha m))")
    r.add_argument("--set", type=_set)
    r.add_argument("--samples", type=_int_list, help="comma-separated m values")
    r.add_argument("--m-lo", type=_int)
    r.add_argument("--m-hi", type=_int)
    r.add_argument("--count", type=_int, default=9, help="geometric sample count")
    r.set_defaults(func=cmd_ratio)

    h = sub.add_parser("hr", parents=[common], help="exact log p(n) against the Hardy-Ramanujan estimate")
    h.add_argument("--n", dest="n_list", type=_int_list, required=True, help="comma-separated n values")
    h.set_defaults(func=cmd_hr)

    v = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    v.add_argument("--skip-determinism", action="store_true", help="skip the repeat run")
    v.set_defaults(func=cmd_verify_all)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2
    if getattr(args, "family_required", False) and args.family is None:
        print("partdens: error: construct needs --family", file=sys.stderr)
        return 2
    if args.threads < 1:
        print("partdens: error: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as e:
        print(f"partdens: error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        # library precondition checks
        print(f"partdens: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"partdens: error: cannot write output: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
