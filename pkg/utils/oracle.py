"""
Brute-Force Oracle
Exhaustive enumeration of avoiders: the ground truth every recurrence and series is checked against
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

import pandas as pd

from config.settings import DEFAULT_CEILING, DEFAULT_JOBS, HARD_CEILING
from utils.errors import CeilingExceededError, PrefixError
from utils.families import PatternFamily
from utils.matcher import compile_matcher, validated_matcher
from utils.permutations import Permutation, avoids_all

logger = logging.getLogger(__name__)

MATCHER_AUTO = "auto"          # compiled after validation, else normative
MATCHER_NAIVE = "naive"        # normative backtracking only
MATCHER_COMPILED = "compiled"  # compiled without validation (workers, validation itself)


# ============================================
# COUNT SEQUENCE
# ============================================

@dataclass(frozen=True)
class CountSequence:
    """Exact counts indexed from n = 0"""

    values: tuple[int, ...]
    label: str = ""
    method: str = ""

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if any(v < 0 for v in values):
            raise ValueError(f"negative count in {self.label or 'sequence'}: {values}")

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    def first_divergence(self, other: Sequence[int]) -> Optional[int]:
        """First index where the two sequences differ over their common range"""
        for n, (x, y) in enumerate(zip(self.values, other)):
            if x != y:
                return n
        return None

    def to_dict(self, params: Optional[dict] = None) -> dict:
        return {
            "params": params if params is not None else {"label": self.label},
            "n_max": self.n_max,
            "values": [str(v) for v in self.values],
        }

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"n": range(len(self.values)), "count": list(self.values)})

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False)


# ============================================
# GUARDS
# ============================================

def check_ceiling(n: int, ceiling: Optional[int] = None, force: bool = False):
    if n < 0:
        raise CeilingExceededError(f"n must be >= 0 (got {n})")
    limit = HARD_CEILING if force else (ceiling if ceiling is not None else DEFAULT_CEILING)
    if n > limit:
        hint = "" if force else " (pass --force to allow up to %d)" % HARD_CEILING
        raise CeilingExceededError(f"n={n} is above the enumeration ceiling {limit}{hint}")


def check_prefix(prefix: Sequence[int], n: int) -> tuple[int, ...]:
    prefix = tuple(int(v) for v in prefix)
    if len(prefix) > n:
        raise PrefixError(f"prefix {prefix} is longer than n={n}")
    if len(set(prefix)) != len(prefix):
        raise PrefixError(f"prefix {prefix} repeats a letter")
    if any(not 1 <= v <= n for v in prefix):
        raise PrefixError(f"prefix {prefix} has letters outside 1..{n}")
    return prefix


def avoidance_test(fam: PatternFamily, matcher: str = MATCHER_AUTO) -> Callable[[Sequence[int]], bool]:
    """Word -> True iff the word avoids every member of fam"""
    if matcher == MATCHER_NAIVE or len(fam) == 0:
        return lambda word: avoids_all(fam, word)
    if matcher == MATCHER_COMPILED:
        return compile_matcher(fam).avoids
    compiled = validated_matcher(fam)
    if compiled is None:
        return lambda word: avoids_all(fam, word)
    return compiled.avoids


# ============================================
# ENUMERATION
# ============================================

def _extensions(n: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Permutations of S_n starting with prefix, in lexicographic order"""
    rest = [v for v in range(1, n + 1) if v not in prefix]
    for tail in itertools.permutations(rest):
        yield prefix + tail


def _count_chunk(fam: PatternFamily, n: int, prefix: tuple[int, ...], matcher: str) -> int:
    test = avoidance_test(fam, matcher)
    return sum(1 for word in _extensions(n, prefix) if test(word))


def _worker_mode(fam: PatternFamily, matcher: str) -> str:
    """Validation happens in the parent so workers never repeat it"""
    if matcher == MATCHER_AUTO:
        return MATCHER_COMPILED if validated_matcher(fam) is not None else MATCHER_NAIVE
    return matcher


def _parallel_count(fam: PatternFamily, n: int, prefix: tuple[int, ...], matcher: str, jobs: int) -> int:
    rest = [v for v in range(1, n + 1) if v not in prefix]
    mode = _worker_mode(fam, matcher)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_count_chunk, fam, n, prefix + (v,), mode) for v in rest]
        return sum(f.result() for f in futures)


@lru_cache(maxsize=None)
def _cached_count(fam: PatternFamily, n: int, matcher: str) -> int:
    total = _count_chunk(fam, n, (), matcher)
    logger.debug("%s: n=%d -> %d avoiders", fam.label, n, total)
    return total


def brute_force_count(fam: PatternFamily, n: int, *, jobs: int = DEFAULT_JOBS,
                      matcher: str = MATCHER_AUTO, ceiling: Optional[int] = None,
                      force: bool = False) -> int:
    """|{pi in S_n : pi avoids fam}| by exhaustive enumeration"""
    check_ceiling(n, ceiling, force)
    if jobs > 1 and n >= 2:
        return _parallel_count(fam, n, (), matcher, jobs)
    return _cached_count(fam, n, matcher)


def brute_force_refined(fam: PatternFamily, n: int, prefix: Sequence[int], *,
                        jobs: int = DEFAULT_JOBS, matcher: str = MATCHER_AUTO,
                        ceiling: Optional[int] = None, force: bool = False) -> int:
    """Avoiders in S_n whose first letters equal prefix; only extensions of prefix are enumerated"""
    check_ceiling(n, ceiling, force)
    prefix = check_prefix(prefix, n)
    if not prefix:
        return brute_force_count(fam, n, jobs=jobs, matcher=matcher, ceiling=ceiling, force=force)
    if jobs > 1 and n - len(prefix) >= 2:
        return _parallel_count(fam, n, prefix, matcher, jobs)
    return _count_chunk(fam, n, prefix, matcher)


def brute_force_sequence(fam: PatternFamily, n_max: int, *, jobs: int = DEFAULT_JOBS,
                         matcher: str = MATCHER_AUTO, ceiling: Optional[int] = None,
                         force: bool = False) -> CountSequence:
    check_ceiling(n_max, ceiling, force)
    values = [brute_force_count(fam, n, jobs=jobs, matcher=matcher, ceiling=ceiling, force=force)
              for n in range(n_max + 1)]
    return CountSequence(tuple(values), label=fam.label, method="oracle")


def iter_avoiders(fam: PatternFamily, n: int, prefix: Sequence[int] = (),
                  matcher: str = MATCHER_AUTO) -> Iterator[Permutation]:
    """Avoiders of S_n in lexicographic order"""
    prefix = check_prefix(prefix, n)
    test = avoidance_test(fam, matcher)
    for word in _extensions(n, prefix):
        if test(word):
            yield Permutation(word)


@lru_cache(maxsize=None)
def refined_table(fam: PatternFamily, n: int, depth: int, matcher: str = MATCHER_AUTO) -> Counter:
    """
    Avoider counts for every prefix of length <= depth, from one pass over S_n.

    Missing keys mean zero avoiders with that prefix.
    """
    check_ceiling(n)
    depth = min(depth, n)
    test = avoidance_test(fam, matcher)
    table: Counter = Counter()
    for word in _extensions(n, ()):
        if test(word):
            for d in range(depth + 1):
                table[word[:d]] += 1
    return table
