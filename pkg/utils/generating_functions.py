"""
Generating-Function Identities
The F^l_n polynomials, rook/Laguerre polynomials, and residual checkers for each series identity
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from utils.errors import FamilyParameterError, IdentityError, SeriesDomainError
from utils.families import KIND_C, classical_parabolic_set
from utils.oracle import CountSequence, brute_force_sequence
from utils.recurrences import FamilyParams, binomial, c_sequence
from utils.series import TruncatedSeries, poly_derivative, poly_trim, polynomial

LINEAR_TERM_DERIVED = "derived"
LINEAR_TERM_PRINTED = "printed"


# ============================================
# RESIDUAL REPORT
# ============================================

@dataclass
class ResidualReport:
    identity: str
    params: dict
    order: int
    residual: TruncatedSeries
    notes: dict = field(default_factory=dict)

    @property
    def is_zero(self) -> bool:
        return self.residual.is_zero()

    def to_dict(self) -> dict:
        first = self.residual.first_nonzero_index()
        out = {
            "identity": self.identity,
            "params": self.params,
            "order": self.order,
            "first_nonzero_index": "zero" if first is None else first,
        }
        if first is not None:
            out["first_nonzero_value"] = str(self.residual[first])
        out.update(self.notes)
        return out


def _as_count(value: Fraction, what: str, n: int) -> int:
    if value.denominator != 1 or value < 0:
        raise IdentityError(f"{what}: coefficient {n} gives {value}, not a nonnegative integer")
    return value.numerator


# ============================================
# F^l_n POLYNOMIALS
# ============================================

def f_poly(n: int, l: int, order: int) -> TruncatedSeries:
    """F^l_n(x) = sum_j (-1)^j C(n-(l-2)j, j) x^j; terms with (l-1)j > n vanish"""
    if l < 2:
        raise FamilyParameterError(f"F^l_n needs l >= 2 (got l={l})")
    if n < 0:
        raise FamilyParameterError(f"F^l_n needs n >= 0 (got n={n})")
    coeffs = []
    for j in range(order + 1):
        if (l - 1) * j > n:
            coeffs.append(0)
            continue
        term = binomial(n - (l - 2) * j, j)
        coeffs.append(-term if j % 2 else term)
    return polynomial(coeffs, order)


# ============================================
# C FAMILIES: OGF IDENTITY
# ============================================

def _main12_fixed_terms(k: int, l: int, order: int, linear_term: str) -> TruncatedSeries:
    """(k-1)!(F_{2l-1}-1)x^{k-1} + (k-2)!(F_{2l-2}-1+c x)x^{k-2}"""
    if linear_term == LINEAR_TERM_DERIVED:
        linear = l
    elif linear_term == LINEAR_TERM_PRINTED:
        linear = 2 * l - 2
    else:
        raise FamilyParameterError(f"unknown linear_term {linear_term!r}")
    one = TruncatedSeries.one(order)
    x = TruncatedSeries.monomial(1, order)
    first = (f_poly(2 * l - 1, l, order) - one).scale(factorial(k - 1)).shift(k - 1)
    second = (f_poly(2 * l - 2, l, order) - one + x.scale(linear)).scale(factorial(k - 2)).shift(k - 2)
    return first + second


def main12_residual(params: FamilyParams, order: int, values: Optional[Sequence[int]] = None,
                    linear_term: str = LINEAR_TERM_DERIVED) -> ResidualReport:
    """
    LHS - RHS of the C-family OGF identity, truncated at order.

    LHS = x(k-1-l) sum_{n>=k-1} c(n)x^n
    RHS = fixed terms + sum_{n>=k} c(n) F^l_{n-k+2l}(x) x^n

    `values` defaults to c_sequence; passing oracle counts checks them directly.
    """
    if params.kind != KIND_C:
        raise FamilyParameterError(f"OGF identity needs a C family, got {params.kind}")
    k, l = params.k, params.l
    if l < 2:
        raise FamilyParameterError(f"OGF identity needs l >= 2 (got l={l})")
    c = list(values) if values is not None else list(c_sequence(params, order).values)
    if len(c) < order + 1:
        raise FamilyParameterError(f"need counts up to n={order}, got {len(c) - 1}")

    lhs_coeffs = [c[n] if n >= k - 1 else 0 for n in range(order + 1)]
    lhs = polynomial(lhs_coeffs, order).scale(k - 1 - l).shift(1)

    rhs = _main12_fixed_terms(k, l, order, linear_term)
    for n in range(k, order + 1):
        rhs = rhs + f_poly(n - k + 2 * l, l, order).scale(c[n]).shift(n)

    return ResidualReport(
        identity="c-family-ogf",
        params={**params.as_dict(), "linear_term": linear_term},
        order=order,
        residual=lhs - rhs,
    )


def c_counts_from_gf(params: FamilyParams, n_max: int) -> CountSequence:
    """
    Solve the OGF identity coefficient by coefficient (l >= 2).

    The x^N coefficient of the RHS contains c(N) once, through F(0) = 1.
    """
    if params.kind != KIND_C or params.l < 2:
        raise FamilyParameterError("series counting of C families needs l >= 2")
    k, l = params.k, params.l
    fixed = _main12_fixed_terms(k, l, n_max, LINEAR_TERM_DERIVED)
    polys = {}
    c = [factorial(n) for n in range(min(k, n_max + 1))]
    for big_n in range(k, n_max + 1):
        total = Fraction((k - 1 - l) * c[big_n - 1]) - fixed[big_n]
        for n in range(k, big_n):
            if n not in polys:
                polys[n] = f_poly(n - k + 2 * l, l, n_max)
            total -= c[n] * polys[n][big_n - n]
        c.append(_as_count(total, "C-family OGF", big_n))
    return CountSequence(tuple(c), label=params.label, method="series")


# ============================================
# P FAMILIES: EGF
# ============================================

def tp1_egf_series(k: int, l: int, order: int, exponent: Optional[int] = None) -> TruncatedSeries:
    """
    (k-l-1)-fold integral of (k-l-1)! exp(e (x + x^2/2 + ... + x^l/l)), e = k-l by default.

    Integration constants make p(m) = m! for m <= k-l-2.
    """
    if k < 3 or not 1 <= l <= k - 1:
        raise FamilyParameterError(f"EGF needs k >= 3 and 1 <= l <= k-1 (got k={k}, l={l})")
    e = k - l if exponent is None else exponent
    integrations = k - l - 1
    start = max(order - integrations, 0)
    arg = polynomial([0] + [Fraction(e, i) for i in range(1, l + 1)], start)
    g = arg.exp().scale(factorial(integrations))
    for t in range(1, integrations + 1):
        g = g.integrate(factorial(integrations - t))
    return g.truncate(order)


def tp1_egf_counts(k: int, l: int, order: int, exponent: Optional[int] = None) -> CountSequence:
    """n! [x^n] of the EGF; non-integer or negative values raise IdentityError"""
    egf = tp1_egf_series(k, l, order, exponent)
    values = tuple(_as_count(egf[n] * factorial(n), "P-family EGF", n) for n in range(order + 1))
    return CountSequence(values, label=f"P(k={k},l={l})", method="series")


# ============================================
# CENTRALIZER OGF (CLASSICAL)
# ============================================

def bd1_gf(k: int, order: int) -> TruncatedSeries:
    """
    (k-3)! x^(k-4) (1-(k-1)x-sqrt(1-2(k-1)x+(k-3)^2x^2))/2 + sum_{i<=k-3} i! x^i.

    At k = 3 the factor x^-1 is absorbed by the numerator, whose constant term vanishes.
    """
    if k < 3:
        raise FamilyParameterError(f"centralizer OGF needs k >= 3 (got k={k})")
    work = order + 1
    radicand = polynomial([1, -2 * (k - 1), (k - 3) ** 2], work)
    numerator = polynomial([1, -(k - 1)], work) - radicand.sqrt()
    body = numerator.scale(Fraction(factorial(k - 3), 2)).shift(k - 4)
    head = polynomial([factorial(i) for i in range(k - 2)], body.order)
    result = (body + head).truncate(order)
    for n, c in enumerate(result):
        _as_count(c, "centralizer OGF", n)
    return result


# ============================================
# LAGUERRE AND ROOK POLYNOMIALS
# ============================================

def laguerre_polynomial(n: int, alpha: int) -> TruncatedSeries:
    """
    L_n^alpha from Rodrigues' formula, exactly.

    d^n/dx^n (e^-x x^(n+alpha)) = e^-x P_n(x) with P_0 = x^(n+alpha) and
    P_{i+1} = P_i' - P_i; then L_n^alpha = P_n / (n! x^alpha).
    """
    if n < 0 or alpha < 0:
        raise SeriesDomainError(f"Laguerre polynomial needs n, alpha >= 0 (got n={n}, alpha={alpha})")
    p = [Fraction(0)] * (n + alpha) + [Fraction(1)]
    for _ in range(n):
        d = poly_derivative(p)
        d = d + [Fraction(0)] * (len(p) - len(d))
        p = [dv - pv for dv, pv in zip(d, p)]
    p = poly_trim(p)
    if any(p[:alpha]):
        raise SeriesDomainError("Rodrigues numerator is not divisible by x^alpha")
    coeffs = [c / factorial(n) for c in p[alpha:]]
    return polynomial(coeffs, n)


def rook_polynomial(s: int, t: int, order: Optional[int] = None) -> TruncatedSeries:
    """R_{s,t}(x) = sum_j j! C(s,j) C(t,j) x^j"""
    if s < 1 or t < 1:
        raise FamilyParameterError(f"board sides must be >= 1 (got {s}x{t})")
    lam = min(s, t)
    order = lam if order is None else order
    return polynomial([factorial(j) * binomial(s, j) * binomial(t, j) for j in range(lam + 1)], order)


def rook_polynomial_from_laguerre(s: int, t: int) -> TruncatedSeries:
    """s! x^s L_s^{t-s}(-1/x) for s <= t (sides swapped otherwise)"""
    if s > t:
        s, t = t, s
    lag = laguerre_polynomial(s, t - s)
    coeffs = [factorial(s) * lag[s - j] * (-1) ** (s - j) for j in range(s + 1)]
    return polynomial(coeffs, s)


def rook_placements(s: int, t: int) -> list[int]:
    """Brute force: number of ways to place j non-attacking rooks on an s x t board, j = 0..min(s,t)"""
    cells = [(r, c) for r in range(s) for c in range(t)]
    counts = []
    for j in range(min(s, t) + 1):
        counts.append(sum(
            1 for chosen in itertools.combinations(cells, j)
            if len({r for r, _ in chosen}) == j and len({c for _, c in chosen}) == j
        ))
    return counts


# ============================================
# MAXIMAL PARABOLIC OGF (CLASSICAL)
# ============================================

def par_rhs(l: int, m: int, order: int) -> TruncatedSeries:
    """
    sum_{r<lambda} x^r r! sum_{j<=r} (-1)^j C(l,j)C(m,j)/C(r,j)
      + (-1)^lambda x^lambda lambda! sum_{r<mu-lambda} x^r r! C(mu-r-1, lambda)
    """
    lam, mu = min(l, m), max(l, m)
    coeffs = [Fraction(0)] * (order + 1)
    for r in range(lam):
        inner = sum((Fraction((-1) ** j * binomial(l, j) * binomial(m, j), binomial(r, j))
                     for j in range(r + 1)), Fraction(0))
        coefficient = inner * factorial(r)
        if coefficient.denominator != 1:
            raise IdentityError(f"r!*inner sum is not an integer at r={r}: {coefficient}")
        if r <= order:
            coeffs[r] += coefficient
    for r in range(mu - lam):
        power = lam + r
        if power <= order:
            coeffs[power] += (-1) ** lam * factorial(lam) * factorial(r) * binomial(mu - r - 1, lam)
    return polynomial(coeffs, order)


def par_identity_residual(l: int, m: int, a: int, order: int,
                          counts: Optional[Sequence[int]] = None, jobs: int = 1) -> ResidualReport:
    """F^a_{l,m}(x) R_{l,m}(-x) - RHS, with F from brute force on the classical set"""
    fam = classical_parabolic_set(l, m, a)
    if counts is None:
        counts = brute_force_sequence(fam, order, jobs=jobs).values
    gf = polynomial(list(counts)[:order + 1], order)
    lhs = gf * rook_polynomial(l, m, order).negate_variable()
    return ResidualReport(
        identity="parabolic-ogf",
        params={"l": l, "m": m, "a": a},
        order=order,
        residual=lhs - par_rhs(l, m, order),
    )


def par_closed_form_gf(l: int, m: int, order: int) -> TruncatedSeries:
    """
    The solved form of the parabolic identity:

    F = sum_{r<k} r! x^r - x^k / R_{l,m}(-x) * sum_{r<lambda} (k+r)! x^r sum_{j=r+1}^{lambda} (-1)^j C(l,j)C(m,j)/C(k+r,j)
    """
    if l < 1 or m < 1:
        raise FamilyParameterError(f"parabolic set needs l, m >= 1 (got l={l}, m={m})")
    k, lam = l + m, min(l, m)
    head = polynomial([factorial(r) for r in range(k)], order)
    inner = []
    for r in range(lam):
        s = sum((Fraction((-1) ** j * binomial(l, j) * binomial(m, j), binomial(k + r, j))
                 for j in range(r + 1, lam + 1)), Fraction(0))
        inner.append(s * factorial(k + r))
    correction = polynomial(inner, order) * rook_polynomial(l, m, order).negate_variable().reciprocal()
    return head - correction.shift(k)
