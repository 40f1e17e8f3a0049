"""Restricted partition counts, density constructions and finite bound audits."""

from .audits import BoundReport, Lemma, SweepSummary, Thresholds
from .constructions import (
    LowerFamilyParams,
    UpperFamilyParams,
    build_lower_set,
    build_upper_set,
    density_profile,
    gap_region,
)
from .core import (
    LogMag,
    brute_force_count,
    count_exact_parts,
    count_partitions,
    count_restricted,
    hardy_ramanujan_log,
    log_count_restricted,
    partition_numbers,
)
from .partset import PartSet, parse_set
from .ratio import RatioSample, ratio_curve

__all__ = [
    "BoundReport", "Lemma", "SweepSummary", "Thresholds",
    "LowerFamilyParams", "UpperFamilyParams", "build_lower_set", "build_upper_set",
    "density_profile", "gap_region",
    "LogMag", "brute_force_count", "count_exact_parts", "count_partitions", "count_restricted",
    "hardy_ramanujan_log", "log_count_restricted", "partition_numbers",
    "PartSet", "parse_set", "RatioSample", "ratio_curve",
]
__version__ = "0.1.0"
