"""Brute-force reference answers by sweeping all 2^n assignments."""
from __future__ import annotations

import os
from typing import Optional

from . import kernels
from .decide import PartitionSpec
from .formula import Assignment, Formula, occurrence_profile

LIMIT_ENV = "PSEUDOMODEL_ORACLE_LIMIT"
DEFAULT_LIMIT = 20


class OracleLimitError(RuntimeError):
    pass


def oracle_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    return int(raw) if raw else DEFAULT_LIMIT


def _guard(f: Formula, limit: Optional[int]) -> None:
    limit = oracle_limit() if limit is None else limit
    if f.n > limit:
        raise OracleLimitError(f"n={f.n} exceeds oracle limit {limit}; refusing a 2^{f.n} sweep")


def decode(code: int, n: int) -> Assignment:
    return tuple((int(code) >> s) & 1 for s in range(n))


def brute_sigma_histogram(f: Formula, limit: Optional[int] = None, backend=None) -> dict[int, int]:
    """Map each attained true-literal count to its number of assignments."""
    _guard(f, limit)
    profile = occurrence_profile(f)
    hist = kernels.sigma_histogram(profile.p_plus, profile.p_minus, backend)
    return {int(k): int(c) for k, c in enumerate(hist) if c}


def _witnesses(codes, n) -> list[Assignment]:
    return sorted(decode(c, n) for c in codes)


def brute_count_models(
    f: Formula, spec: PartitionSpec, limit: Optional[int] = None, backend=None
) -> tuple[int, list[Assignment]]:
    """All assignments whose clause true-count histogram equals ``spec.mu``."""
    _guard(f, limit)
    codes = kernels.scan_assignments(f.n, f.clauses, spec.mu, kernels.MODE_HISTOGRAM, backend)
    return len(codes), _witnesses(codes, f.n)


def brute_sat(f: Formula, limit: Optional[int] = None, backend=None) -> tuple[int, list[Assignment]]:
    _guard(f, limit)
    codes = kernels.scan_assignments(f.n, f.clauses, (), kernels.MODE_SAT, backend)
    return len(codes), _witnesses(codes, f.n)
