"""
Recurrence Engines
Big-integer sequences from the C- and P-family recurrences, closed forms, and reference sequences
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from utils.errors import BinomialDomainError, FamilyParameterError
from utils.families import KIND_C, KIND_P, validate_c_params, validate_p_params
from utils.oracle import CountSequence

REFERENCE_NAMES = ("catalan", "bell", "motzkin", "involutions")


# ============================================
# PARAMETERS
# ============================================

@dataclass(frozen=True)
class FamilyParams:
    kind: str
    k: int
    a: int
    l: int

    def __post_init__(self):
        kind = self.kind.upper()
        object.__setattr__(self, "kind", kind)
        if kind == KIND_C:
            validate_c_params(self.k, self.a, self.l)
        elif kind == KIND_P:
            validate_p_params(self.k, self.a, self.l)
        else:
            raise FamilyParameterError(f"unknown family kind {self.kind!r}")

    def as_dict(self) -> dict:
        return {"kind": self.kind, "k": self.k, "a": self.a, "l": self.l}

    @property
    def label(self) -> str:
        return f"{self.kind}(k={self.k},a={self.a},l={self.l})"


def binomial(n: int, j: int) -> int:
    """n choose j; zero for j < 0 or j > n; negative n is an error"""
    if n < 0:
        raise BinomialDomainError(f"binomial with negative top: C({n}, {j})")
    if j < 0 or j > n:
        return 0
    return comb(n, j)


def _factorial_base(k: int, n_max: int) -> list[int]:
    """n! for n < k: patterns of length k cannot occur in shorter permutations"""
    return [factorial(n) for n in range(min(k, n_max + 1))]


# ============================================
# C FAMILIES
# ============================================

def c_sequence(params: FamilyParams, n_max: int) -> CountSequence:
    """
    c(n) = (k-l-1) c(n-1) + sum_{j=0}^{floor((n-k)/l)+1} (-1)^j C(n-k+2-(j-1)(l-1), j+1) c(n-1-j)

    for n >= k, with c(n) = n! below k. The anchor a does not enter.
    """
    if params.kind != KIND_C:
        raise FamilyParameterError(f"c_sequence needs a C family, got {params.kind}")
    k, l = params.k, params.l
    values = _factorial_base(k, n_max)
    for n in range(k, n_max + 1):
        total = (k - l - 1) * values[n - 1]
        for j in range((n - k) // l + 2):
            term = binomial(n - k + 2 - (j - 1) * (l - 1), j + 1) * values[n - 1 - j]
            total += -term if j % 2 else term
        values.append(total)
    return CountSequence(tuple(values), label=params.label, method="recurrence")


def refined_c_boundary(params: FamilyParams, n: int, i: int) -> int:
    """
    c(n; n-k+a+1-i): avoiders whose first letter is n-k+a+1-i, for 1 <= i <= n-k+1.
    """
    if params.kind != KIND_C:
        raise FamilyParameterError(f"refined_c_boundary needs a C family, got {params.kind}")
    k, l = params.k, params.l
    if n < k:
        raise FamilyParameterError(f"refined boundary counts need n >= k (got n={n}, k={k})")
    if not 1 <= i <= n - k + 1:
        raise FamilyParameterError(f"i must lie in 1..{n - k + 1} (got i={i})")
    values = c_sequence(params, n - 1).values
    total = 0
    for j in range((i - 1) // l + 2):
        term = binomial(i - (j - 1) * (l - 1), j) * values[n - 1 - j]
        total += -term if j % 2 else term
    return total


# ============================================
# P FAMILIES
# ============================================

def _p_step(k: int, l: int, n: int, values: list[int]) -> int:
    return (k - l) * sum(factorial(j) * binomial(n - k + l, j) * values[n - 1 - j]
                         for j in range(l) if n - 1 - j >= 0)


def p_sequence(params: FamilyParams, n_max: int) -> CountSequence:
    """p(n) = (k-l) sum_{j=0}^{l-1} j! C(n-k+l, j) p(n-1-j) for n >= k, p(n) = n! below k"""
    if params.kind != KIND_P:
        raise FamilyParameterError(f"p_sequence needs a P family, got {params.kind}")
    k, l = params.k, params.l
    values = _factorial_base(k, n_max)
    for n in range(k, n_max + 1):
        values.append(_p_step(k, l, n, values))
    return CountSequence(tuple(values), label=params.label, method="recurrence")


def p_sequence_full_range(params: FamilyParams, n_max: int) -> CountSequence:
    """
    The P recurrence applied from n = k-l upward.

    Below k-l the binomial top n-k+l is negative, so the recurrence is not
    defined there and n! is used. Agreement with p_sequence means the
    recurrence reproduces n! on k-l <= n < k.
    """
    if params.kind != KIND_P:
        raise FamilyParameterError(f"p_sequence_full_range needs a P family, got {params.kind}")
    k, l = params.k, params.l
    start = max(1, k - l)
    values = _factorial_base(start, n_max)
    for n in range(start, n_max + 1):
        values.append(_p_step(k, l, n, values))
    return CountSequence(tuple(values), label=params.label, method="recurrence-full-range")


def p_closed_form_l1(k: int, n: int) -> int:
    """(k-2)! (k-1)^(n-k+2), valid for n >= k-1"""
    if k < 3:
        raise FamilyParameterError(f"closed form needs k >= 3 (got k={k})")
    if n < k - 1:
        raise FamilyParameterError(f"closed form needs n >= k-1 (got n={n}, k={k})")
    return factorial(k - 2) * (k - 1) ** (n - k + 2)


def p_kth_value(k: int) -> int:
    """p(k) = k! - (k-1)! for l = 1"""
    return factorial(k) - factorial(k - 1)


# ============================================
# REFERENCE SEQUENCES
# ============================================

def _catalan(n_max):
    return [comb(2 * n, n) // (n + 1) for n in range(n_max + 1)]


def _bell(n_max):
    """Bell triangle: each row starts with the previous row's last entry"""
    values, row = [1], [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for entry in row:
            nxt.append(nxt[-1] + entry)
        values.append(nxt[0])
        row = nxt
    return values[:n_max + 1]


def _motzkin(n_max):
    values = []
    for n in range(n_max + 1):
        if n < 2:
            values.append(1)
            continue
        values.append(values[n - 1] + sum(values[i] * values[n - 2 - i] for i in range(n - 1)))
    return values


def _involutions(n_max):
    values = []
    for n in range(n_max + 1):
        values.append(1 if n < 2 else values[n - 1] + (n - 1) * values[n - 2])
    return values


_REFERENCE = {
    "catalan": _catalan,
    "bell": _bell,
    "motzkin": _motzkin,
    "involutions": _involutions,
}


def reference_sequence(name: str, n_max: int) -> CountSequence:
    if name not in _REFERENCE:
        raise FamilyParameterError(f"unknown reference sequence {name!r}; choose from {', '.join(REFERENCE_NAMES)}")
    if n_max < 0:
        raise FamilyParameterError(f"n_max must be >= 0 (got {n_max})")
    return CountSequence(tuple(_REFERENCE[name](n_max)), label=name, method="reference")


def recurrence_sequence(params: FamilyParams, n_max: int) -> CountSequence:
    return c_sequence(params, n_max) if params.kind == KIND_C else p_sequence(params, n_max)
