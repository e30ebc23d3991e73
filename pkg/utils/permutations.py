"""
Permutations and Generalized Patterns
One-line permutations, dashed patterns, and the normative occurrence matcher
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from utils.errors import PatternSyntaxError

MAX_PATTERN_LENGTH = 9


# ============================================
# DOMAIN TYPES
# ============================================

@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n in one-line notation"""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise PatternSyntaxError(f"{word} is not a permutation of 1..{len(word)}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read "2413" (single digits) or "10 2 1 ..." (space separated)"""
        text = text.strip()
        if "," in text or " " in text:
            parts = text.replace(",", " ").split()
        else:
            parts = list(text)
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            if isinstance(exc, PatternSyntaxError):
                raise
            raise PatternSyntaxError(f"cannot read permutation {text!r}") from exc

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, idx):
        return self.word[idx]

    def __str__(self):
        sep = "" if len(self.word) <= 9 else " "
        return sep.join(str(v) for v in self.word)


@dataclass(frozen=True)
class GeneralizedPattern:
    """
    A dashed pattern.

    `adjacent[t]` is True when positions t and t+1 (0-based) share a block,
    i.e. no dash separates them. A classical pattern has every flag False.
    """

    word: tuple[int, ...]
    adjacent: tuple[bool, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        adjacent = tuple(bool(f) for f in self.adjacent)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "adjacent", adjacent)
        k = len(word)
        if k < 1:
            raise PatternSyntaxError("a pattern needs at least one letter")
        if sorted(word) != list(range(1, k + 1)):
            raise PatternSyntaxError(f"letters {word} are not a permutation of 1..{k}")
        if len(adjacent) != k - 1:
            raise PatternSyntaxError(f"expected {k - 1} adjacency flags, got {len(adjacent)}")

    @classmethod
    def classical(cls, word: Sequence[int]) -> "GeneralizedPattern":
        return cls(tuple(word), (False,) * (len(word) - 1))

    @classmethod
    def from_blocks(cls, word: Sequence[int], sizes: Sequence[int]) -> "GeneralizedPattern":
        """Build from block sizes, e.g. word (1,3,2,4) with sizes (2,1,1) is 13-2-4"""
        if sum(sizes) != len(word) or any(s < 1 for s in sizes):
            raise PatternSyntaxError(f"block sizes {tuple(sizes)} do not cover {len(word)} letters")
        flags = []
        for idx, size in enumerate(sizes):
            flags.extend([True] * (size - 1))
            if idx < len(sizes) - 1:
                flags.append(False)
        return cls(tuple(word), tuple(flags))

    @property
    def k(self) -> int:
        return len(self.word)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as tuples of 1-based positions"""
        out, current = [], [1]
        for pos, flag in enumerate(self.adjacent, start=2):
            if flag:
                current.append(pos)
            else:
                out.append(tuple(current))
                current = [pos]
        out.append(tuple(current))
        return tuple(out)

    @property
    def is_classical(self) -> bool:
        return not any(self.adjacent)

    def __str__(self):
        return format_pattern(self)


# ============================================
# NOTATION
# ============================================

def parse_pattern(text: str) -> GeneralizedPattern:
    """
    Parse dash notation: pattern := run ('-' run)*, run := digit+.

    "13-2-4" -> word (1,3,2,4), blocks [{1,2},{3},{4}]
    """
    if not isinstance(text, str) or not text:
        raise PatternSyntaxError("empty pattern")
    bad = sorted({ch for ch in text if ch != "-" and ch not in "123456789"})
    if bad:
        raise PatternSyntaxError(f"pattern {text!r} contains invalid characters {''.join(bad)!r}")
    runs = text.split("-")
    if any(run == "" for run in runs):
        raise PatternSyntaxError(f"pattern {text!r} has a leading, trailing or doubled dash")
    digits = [int(ch) for run in runs for ch in run]
    if len(digits) > MAX_PATTERN_LENGTH:
        raise PatternSyntaxError(f"pattern {text!r} is longer than {MAX_PATTERN_LENGTH} letters")
    if sorted(digits) != list(range(1, len(digits) + 1)):
        raise PatternSyntaxError(f"letters of {text!r} are not a permutation of 1..{len(digits)}")
    return GeneralizedPattern.from_blocks(digits, [len(run) for run in runs])


def format_pattern(p: GeneralizedPattern) -> str:
    out = [str(p.word[0])]
    for flag, letter in zip(p.adjacent, p.word[1:]):
        if not flag:
            out.append("-")
        out.append(str(letter))
    return "".join(out)


def iter_patterns(k: int) -> Iterator[GeneralizedPattern]:
    """Every pattern of length k: all words times all 2^(k-1) block structures"""
    for word in itertools.permutations(range(1, k + 1)):
        for flags in itertools.product((False, True), repeat=k - 1):
            yield GeneralizedPattern(word, flags)


# ============================================
# ORDER ISOMORPHISM
# ============================================

def order_isomorphic(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff u_i < u_j <=> v_i < v_j for all i < j (entries pairwise distinct)"""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    m = len(u)
    return sorted(range(m), key=u.__getitem__) == sorted(range(m), key=v.__getitem__)


# ============================================
# OCCURRENCE MATCHER (normative)
# ============================================

def _match(p: GeneralizedPattern, word: Sequence[int], first_only: bool) -> int:
    """Backtracking over index tuples; letters are checked against earlier picks as they are placed"""
    k, n = p.k, len(word)
    if k > n:
        return 0
    pw, adj = p.word, p.adjacent
    chosen = [0] * k

    def extend(t: int, start: int) -> int:
        if t == k:
            return 1
        if t and adj[t - 1]:
            nxt = chosen[t - 1] + 1
            candidates = range(nxt, nxt + 1) if nxt < n else range(0)
        else:
            candidates = range(start, n - (k - t) + 1)
        found = 0
        target = pw[t]
        for i in candidates:
            v = word[i]
            if all((word[chosen[s]] < v) == (pw[s] < target) for s in range(t)):
                chosen[t] = i
                found += extend(t + 1, i + 1)
                if first_only and found:
                    return found
        return found

    return extend(0, 0)


def occurs_in(p: GeneralizedPattern, pi: Sequence[int]) -> bool:
    return _match(p, tuple(pi), first_only=True) > 0


def count_occurrences(p: GeneralizedPattern, pi: Sequence[int]) -> int:
    return _match(p, tuple(pi), first_only=False)


def avoids_all(fam: Iterable[GeneralizedPattern], pi: Sequence[int]) -> bool:
    """True iff no member of the family occurs in pi (vacuously true for an empty family)"""
    word = tuple(pi)
    return not any(_match(p, word, first_only=True) for p in fam)
