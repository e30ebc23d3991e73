"""
Pattern Families
The C and P families of dashed patterns and the classical sets they generalize
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterable

from utils.errors import FamilyParameterError, PatternSyntaxError
from utils.permutations import GeneralizedPattern, format_pattern, parse_pattern

KIND_C = "C"
KIND_P = "P"
KIND_CENTRALIZER = "classical-centralizer"
KIND_PARABOLIC = "classical-parabolic"
KIND_EXPLICIT = "explicit"

# Readings of "centralizer of k-1 and k"
READING_PREFIX = "prefix"          # pi_1 = k-1, pi_2 = k
READING_STABILIZER = "stabilizer"  # pi_{k-1} = k-1, pi_k = k


# ============================================
# DOMAIN TYPE
# ============================================

@dataclass(frozen=True)
class PatternFamily:
    """A finite set of equal-length patterns with provenance"""

    patterns: tuple[GeneralizedPattern, ...]
    kind: str = KIND_EXPLICIT
    params: tuple[tuple[str, object], ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.patterns, key=format_pattern))
        object.__setattr__(self, "patterns", ordered)
        names = [format_pattern(p) for p in ordered]
        if len(set(names)) != len(names):
            raise FamilyParameterError("family contains duplicate patterns")
        lengths = {p.k for p in ordered}
        if len(lengths) > 1:
            raise FamilyParameterError(f"family mixes pattern lengths {sorted(lengths)}")

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self):
        return len(self.patterns)

    @property
    def k(self):
        return self.patterns[0].k if self.patterns else None

    @property
    def param_dict(self) -> dict:
        return dict(self.params)

    @property
    def label(self) -> str:
        if not self.params:
            return "{" + ", ".join(self.pattern_strings()) + "}"
        inner = ",".join(f"{name}={value}" for name, value in self.params)
        return f"{self.kind}({inner})"

    def pattern_strings(self) -> list[str]:
        return [format_pattern(p) for p in self.patterns]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": self.param_dict, "patterns": self.pattern_strings()}


# ============================================
# VALIDATION
# ============================================

def _require(condition: bool, message: str):
    if not condition:
        raise FamilyParameterError(message)


def validate_c_params(k: int, a: int, l: int):
    _require(k >= 3, f"C family needs k >= 3 (got k={k})")
    _require(a >= 1, f"C family needs a >= 1 (got a={a})")
    _require(l >= 1, f"C family needs l >= 1 (got l={l})")
    _require(a + l <= k, f"C family needs a+l <= k (got a+l={a + l}, k={k})")


def validate_p_params(k: int, a: int, l: int):
    _require(k >= 3, f"P family needs k >= 3 (got k={k})")
    _require(1 <= l <= k - 1, f"P family needs 1 <= l <= k-1 (got l={l}, k={k})")
    _require(a >= 1, f"P family needs a >= 1 (got a={a})")
    _require(a + l - 1 <= k, f"P family needs a+l-1 <= k (got a+l-1={a + l - 1}, k={k})")


# ============================================
# CONSTRUCTORS
# ============================================

def c_family(k: int, a: int, l: int) -> PatternFamily:
    """C^k_{a,l}: sigma_1 sigma_2-sigma_3-...-sigma_k with sigma_1 = a, sigma_2 = a+l"""
    validate_c_params(k, a, l)
    rest = [v for v in range(1, k + 1) if v not in (a, a + l)]
    sizes = (2,) + (1,) * (k - 2)
    patterns = tuple(
        GeneralizedPattern.from_blocks((a, a + l) + tail, sizes)
        for tail in itertools.permutations(rest)
    )
    return PatternFamily(patterns, KIND_C, (("k", k), ("a", a), ("l", l)))


def p_family(k: int, a: int, l: int) -> PatternFamily:
    """P^k_{a,l}: first block a permutation of a..a+l-1, remaining letters singletons"""
    validate_p_params(k, a, l)
    head_values = list(range(a, a + l))
    tail_values = [v for v in range(1, k + 1) if not a <= v <= a + l - 1]
    sizes = (l,) + (1,) * (k - l)
    patterns = tuple(
        GeneralizedPattern.from_blocks(head + tail, sizes)
        for head in itertools.permutations(head_values)
        for tail in itertools.permutations(tail_values)
    )
    return PatternFamily(patterns, KIND_P, (("k", k), ("a", a), ("l", l)))


def classical_centralizer_set(k: int, reading: str = READING_PREFIX) -> PatternFamily:
    """
    Classical patterns for "the centralizer of k-1 and k".

    The prefix reading {pi: pi_1 = k-1, pi_2 = k} is the default; the
    pointwise-stabilizer reading {pi: pi_{k-1} = k-1, pi_k = k} is kept so
    both can be checked against the generating function.
    """
    _require(k >= 3, f"centralizer set needs k >= 3 (got k={k})")
    if reading == READING_PREFIX:
        keep = lambda w: w[0] == k - 1 and w[1] == k
    elif reading == READING_STABILIZER:
        keep = lambda w: w[k - 2] == k - 1 and w[k - 1] == k
    else:
        raise FamilyParameterError(f"unknown centralizer reading {reading!r}")
    patterns = tuple(
        GeneralizedPattern.classical(w)
        for w in itertools.permutations(range(1, k + 1)) if keep(w)
    )
    return PatternFamily(patterns, KIND_CENTRALIZER, (("k", k), ("reading", reading)))


def classical_parabolic_set(l: int, m: int, a: int) -> PatternFamily:
    """P'_{l,m}: classical sigma in S_{l+m} whose first l letters are exactly a..a+l-1"""
    _require(l >= 1 and m >= 1, f"parabolic set needs l, m >= 1 (got l={l}, m={m})")
    _require(1 <= a <= m + 1, f"parabolic set needs 1 <= a <= m+1 (got a={a}, m={m})")
    head_values = list(range(a, a + l))
    tail_values = [v for v in range(1, l + m + 1) if not a <= v <= a + l - 1]
    patterns = tuple(
        GeneralizedPattern.classical(head + tail)
        for head in itertools.permutations(head_values)
        for tail in itertools.permutations(tail_values)
    )
    return PatternFamily(patterns, KIND_PARABOLIC, (("l", l), ("m", m), ("a", a)))


def explicit_family(patterns: Iterable) -> PatternFamily:
    """A family from pattern strings or GeneralizedPattern objects; repeats collapse"""
    parsed = {}
    for item in patterns:
        p = parse_pattern(item) if isinstance(item, str) else item
        if not isinstance(p, GeneralizedPattern):
            raise PatternSyntaxError(f"not a pattern: {item!r}")
        parsed[format_pattern(p)] = p
    return PatternFamily(tuple(parsed.values()), KIND_EXPLICIT, ())


def build_family(kind: str, k: int, a: int, l: int) -> PatternFamily:
    """Dispatch on the CLI's --family value"""
    kind = kind.upper()
    if kind == KIND_C:
        return c_family(k, a, l)
    if kind == KIND_P:
        return p_family(k, a, l)
    raise FamilyParameterError(f"unknown family kind {kind!r} (expected C or P)")


def expected_size(kind: str, k: int, l: int) -> int:
    """(k-2)! for C families, l!(k-l)! for P families"""
    if kind == KIND_C:
        return factorial(k - 2)
    if kind == KIND_P:
        return factorial(l) * factorial(k - l)
    raise FamilyParameterError(f"no size formula for kind {kind!r}")


def valid_c_params(kmax: int):
    """Every valid (k, a, l) for C families with 3 <= k <= kmax"""
    return [(k, a, l) for k in range(3, kmax + 1) for l in range(1, k) for a in range(1, k - l + 1)]


def valid_p_params(kmax: int):
    """Every valid (k, a, l) for P families with 3 <= k <= kmax"""
    return [(k, a, l) for k in range(3, kmax + 1) for l in range(1, k) for a in range(1, k - l + 2)]
