"""
Compiled Family Matcher
Fast containment test for families whose trailing singleton letters range over all arrangements
"""

from __future__ import annotations

import bisect
import itertools
import logging
from functools import lru_cache
from math import factorial
from typing import Optional, Sequence

from config.settings import MATCHER_VALIDATION_N
from utils.families import PatternFamily
from utils.permutations import avoids_all

logger = logging.getLogger(__name__)

# family -> compiled matcher that passed validation
_VALIDATED: dict = {}


# ============================================
# STRUCTURE DETECTION
# ============================================

def _argsort(values: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(range(len(values)), key=values.__getitem__))


def _gaps(head: Sequence[int], k: int) -> tuple[int, ...]:
    """Number of tail letters below, between and above the sorted head values"""
    s = sorted(head)
    inner = [s[t + 1] - s[t] - 1 for t in range(len(s) - 1)]
    return (s[0] - 1, *inner, k - s[-1])


def split_free_tail(fam: PatternFamily) -> int:
    """
    Smallest head length h such that the family is head x (all tail arrangements).

    Positions after h must be singleton blocks, and every head present must
    be followed by all (k-h)! arrangements of its complementary letters.
    h = k always qualifies.
    """
    k = fam.k
    for h in range(1, k + 1):
        tails: dict = {}
        ok = True
        for p in fam:
            if h < k and any(p.adjacent[h - 1:]):
                ok = False
                break
            key = (p.word[:h], p.adjacent[:h - 1])
            tails.setdefault(key, set()).add(p.word[h:])
        if ok and all(len(t) == factorial(k - h) for t in tails.values()):
            return h
    return k


# ============================================
# COMPILED MATCHER
# ============================================

@lru_cache(maxsize=None)
def _index_tuples(n: int, flags: tuple[bool, ...]) -> tuple[tuple[int, ...], ...]:
    """All increasing index tuples of length len(flags)+1 honouring the adjacency flags"""
    h = len(flags) + 1
    out = []

    def grow(prefix):
        t = len(prefix)
        if t == h:
            out.append(tuple(prefix))
            return
        if t and flags[t - 1]:
            nxt = prefix[-1] + 1
            if nxt < n:
                grow(prefix + [nxt])
            return
        start = prefix[-1] + 1 if prefix else 0
        for i in range(start, n - (h - t) + 1):
            grow(prefix + [i])

    grow([])
    return tuple(out)


class CompiledMatcher:
    """
    Containment test for a free-tailed family.

    A head occurrence (indices honouring the head's adjacency, values in the
    head's relative order) extends to a full occurrence iff the letters after
    it supply at least gaps[t] values in each gap t of the sorted head values.
    """

    def __init__(self, fam: PatternFamily):
        self.family = fam
        self.k = fam.k or 0
        self.head_length = split_free_tail(fam) if len(fam) else 0
        h = self.head_length
        rules: dict = {}
        for p in fam:
            shape = p.adjacent[:h - 1]
            order = _argsort(p.word[:h])
            rules.setdefault(shape, {}).setdefault(order, set()).add(_gaps(p.word[:h], self.k))
        self.rules = {shape: {order: tuple(sorted(g)) for order, g in orders.items()}
                      for shape, orders in rules.items()}

    def contains(self, word: Sequence[int]) -> bool:
        n = len(word)
        if not self.rules or self.k > n:
            return False
        h = self.head_length
        for shape, orders in self.rules.items():
            for idx in _index_tuples(n, shape):
                vals = [word[i] for i in idx]
                gap_options = orders.get(_argsort(vals))
                if gap_options is None:
                    continue
                counts = [0] * (h + 1)
                ordered = sorted(vals)
                for v in word[idx[-1] + 1:]:
                    counts[bisect.bisect_left(ordered, v)] += 1
                for need in gap_options:
                    if all(c >= g for c, g in zip(counts, need)):
                        return True
        return False

    def avoids(self, word: Sequence[int]) -> bool:
        return not self.contains(word)


def compile_matcher(fam: PatternFamily) -> CompiledMatcher:
    return CompiledMatcher(fam)


# ============================================
# VALIDATION AGAINST THE BACKTRACKING MATCHER
# ============================================

def validate_matcher(fam: PatternFamily, n_max: int = MATCHER_VALIDATION_N) -> Optional[dict]:
    """
    Compare the compiled matcher with the normative matcher on S_0..S_{n_max}.

    Returns None when they agree, otherwise the first disagreement.
    """
    compiled = compile_matcher(fam)
    for n in range(n_max + 1):
        for word in itertools.permutations(range(1, n + 1)):
            fast = compiled.avoids(word)
            slow = avoids_all(fam, word)
            if fast != slow:
                return {"n": n, "permutation": word, "compiled_avoids": fast, "normative_avoids": slow}
    return None


def validated_matcher(fam: PatternFamily) -> Optional[CompiledMatcher]:
    """Compiled matcher for fam after a one-time validation; None if validation failed"""
    if fam in _VALIDATED:
        return _VALIDATED[fam]
    mismatch = validate_matcher(fam)
    if mismatch is not None:
        logger.warning("Compiled matcher rejected for %s: %s", fam.label, mismatch)
        _VALIDATED[fam] = None
    else:
        logger.debug("Compiled matcher validated for %s (head length %d)",
                     fam.label, compile_matcher(fam).head_length)
        _VALIDATED[fam] = compile_matcher(fam)
    return _VALIDATED[fam]
