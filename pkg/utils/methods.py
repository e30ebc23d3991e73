"""
Counting Methods
Dispatch a family to the oracle, its recurrence, or its generating function
"""

from __future__ import annotations

import logging
from typing import Optional

from config.settings import DEFAULT_JOBS
from utils.errors import CeilingExceededError, FamilyParameterError
from utils.families import KIND_C, KIND_P, PatternFamily, build_family, explicit_family
from utils.generating_functions import c_counts_from_gf, tp1_egf_counts
from utils.oracle import CountSequence, brute_force_count, brute_force_sequence
from utils.recurrences import FamilyParams, recurrence_sequence

logger = logging.getLogger(__name__)

METHOD_ORACLE = "oracle"
METHOD_RECURRENCE = "recurrence"
METHOD_SERIES = "series"
METHODS = (METHOD_ORACLE, METHOD_RECURRENCE, METHOD_SERIES)


def applicable_methods(params: Optional[FamilyParams]) -> list[str]:
    """Explicit pattern lists only have the oracle; C families with l = 1 have no series route"""
    if params is None:
        return [METHOD_ORACLE]
    if params.kind == KIND_C and params.l == 1:
        return [METHOD_ORACLE, METHOD_RECURRENCE]
    return list(METHODS)


def _require_method(method: str, params: Optional[FamilyParams]):
    if method not in METHODS:
        raise FamilyParameterError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if method not in applicable_methods(params):
        what = "explicit pattern lists" if params is None else params.label
        raise FamilyParameterError(f"method {method!r} does not apply to {what}")


def sequence_by_method(fam: PatternFamily, params: Optional[FamilyParams], method: str, n_max: int, *,
                       jobs: int = DEFAULT_JOBS, force: bool = False) -> CountSequence:
    """Counts for n = 0..n_max by one method"""
    _require_method(method, params)
    if n_max < 0:
        raise FamilyParameterError(f"n_max must be >= 0 (got {n_max})")
    if method == METHOD_ORACLE:
        return brute_force_sequence(fam, n_max, jobs=jobs, force=force)
    if method == METHOD_RECURRENCE:
        return recurrence_sequence(params, n_max)
    if params.kind == KIND_P:
        return tp1_egf_counts(params.k, params.l, n_max)
    return c_counts_from_gf(params, n_max)


def count_by_method(fam: PatternFamily, params: Optional[FamilyParams], method: str, n: int, *,
                    jobs: int = DEFAULT_JOBS, force: bool = False) -> int:
    _require_method(method, params)
    if method == METHOD_ORACLE:
        return brute_force_count(fam, n, jobs=jobs, force=force)
    return sequence_by_method(fam, params, method, n, jobs=jobs, force=force)[n]


def all_methods(fam: PatternFamily, params: Optional[FamilyParams], n: int, *,
                jobs: int = DEFAULT_JOBS, force: bool = False) -> dict:
    """
    Every applicable method at n, plus a consistency verdict.

    The oracle is authoritative; it is skipped when n is above its ceiling.
    """
    results = {}
    for method in applicable_methods(params):
        if method == METHOD_ORACLE:
            try:
                results[method] = count_by_method(fam, params, method, n, jobs=jobs, force=force)
            except CeilingExceededError as exc:
                logger.info("oracle skipped at n=%d: %s", n, exc)
            continue
        results[method] = count_by_method(fam, params, method, n, jobs=jobs, force=force)
    values = set(results.values())
    reference = results.get(METHOD_ORACLE)
    disagreeing = sorted(m for m, v in results.items() if reference is not None and v != reference)
    return {
        "values": results,
        "consistent": len(values) <= 1,
        "authoritative": METHOD_ORACLE if reference is not None else None,
        "disagreeing": disagreeing,
    }


def resolve_family(kind: Optional[str], k: Optional[int], a: Optional[int], l: Optional[int],
                   patterns=()) -> tuple[PatternFamily, Optional[FamilyParams]]:
    """A family from --family/--k/--a/--l or from --pattern; exactly one form must be given"""
    if patterns and kind:
        raise FamilyParameterError("give either --family or --pattern, not both")
    if patterns:
        return explicit_family(patterns), None
    if not kind:
        raise FamilyParameterError("give --family with --k, --a, --l, or at least one --pattern")
    missing = [name for name, value in (("--k", k), ("--a", a), ("--l", l)) if value is None]
    if missing:
        raise FamilyParameterError(f"--family {kind} needs {', '.join(missing)}")
    params = FamilyParams(kind, k, a, l)
    return build_family(params.kind, k, a, l), params
