"""
Truncated Power Series
Exact rational formal power series c_0 + c_1 x + ... + c_N x^N
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Union

from utils.errors import SeriesDomainError

Scalar = Union[int, Fraction]


def _q(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise SeriesDomainError(f"series coefficients must be exact rationals, got {type(value).__name__}")


class TruncatedSeries:
    """
    A power series known exactly through x^order.

    Binary operations truncate to the smaller order. integrate() knows one
    more coefficient than its input and derivative() one fewer.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable, order: Optional[int] = None):
        coeffs = [_q(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesDomainError(f"series order must be >= 0 (got {order})")
        coeffs = coeffs[:order + 1] + [Fraction(0)] * (order + 1 - len(coeffs))
        self.coefficients = tuple(coeffs)

    # ----- constructors -----

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coefficient: Scalar = 1) -> "TruncatedSeries":
        coeffs = [0] * (order + 1)
        if 0 <= power <= order:
            coeffs[power] = coefficient
        return cls(coeffs, order)

    # ----- inspection -----

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coefficients)
        return f"TruncatedSeries([{terms}], order={self.order})"

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def first_nonzero_index(self) -> Optional[int]:
        for n, c in enumerate(self.coefficients):
            if c:
                return n
        return None

    def integer_coefficients(self) -> list[int]:
        """Coefficients as ints; raises if any is not integral"""
        out = []
        for n, c in enumerate(self.coefficients):
            if c.denominator != 1:
                raise SeriesDomainError(f"coefficient of x^{n} is not an integer: {c}")
            out.append(c.numerator)
        return out

    # ----- ring operations -----

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([_q(other)], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return TruncatedSeries([self[i] + other[i] for i in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coefficients], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return TruncatedSeries(
            [sum((a[j] * b[n - j] for j in range(n + 1)), Fraction(0)) for n in range(order + 1)],
            order,
        )

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "TruncatedSeries":
        f = _q(factor)
        return TruncatedSeries([f * c for c in self.coefficients], self.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesDomainError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coefficients[:order + 1], order)

    def shift(self, m: int) -> "TruncatedSeries":
        """
        Multiply by x^m, keeping the order.

        Negative m divides by x^|m|; the dropped coefficients must vanish and
        the order falls by |m|.
        """
        if m >= 0:
            return TruncatedSeries([0] * m + list(self.coefficients), self.order)
        drop = -m
        if drop > self.order:
            raise SeriesDomainError(f"cannot divide a series of order {self.order} by x^{drop}")
        if any(self.coefficients[:drop]):
            raise SeriesDomainError(f"series is not divisible by x^{drop}")
        return TruncatedSeries(self.coefficients[drop:], self.order - drop)

    def negate_variable(self) -> "TruncatedSeries":
        """f(-x)"""
        return TruncatedSeries([-c if n % 2 else c for n, c in enumerate(self.coefficients)], self.order)

    # ----- calculus -----

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            raise SeriesDomainError("derivative of an order-0 series has no known coefficients")
        return TruncatedSeries([n * c for n, c in enumerate(self.coefficients) if n], self.order - 1)

    def integrate(self, constant: Scalar = 0) -> "TruncatedSeries":
        return TruncatedSeries(
            [_q(constant)] + [c / (n + 1) for n, c in enumerate(self.coefficients)],
            self.order + 1,
        )

    # ----- inverses and transcendental functions -----

    def reciprocal(self) -> "TruncatedSeries":
        c0 = self.coefficients[0]
        if c0 == 0:
            raise SeriesDomainError("reciprocal needs a nonzero constant term")
        a = self.coefficients
        inv = [1 / c0]
        for n in range(1, self.order + 1):
            s = sum((a[j] * inv[n - j] for j in range(1, n + 1)), Fraction(0))
            inv.append(-s / c0)
        return TruncatedSeries(inv, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return self.scale(1 / _q(other))

    def sqrt(self) -> "TruncatedSeries":
        """The square root with constant term 1"""
        if self.coefficients[0] != 1:
            raise SeriesDomainError(f"sqrt needs constant term 1 (got {self.coefficients[0]})")
        a = self.coefficients
        r = [Fraction(1)]
        for n in range(1, self.order + 1):
            s = a[n] - sum((r[j] * r[n - j] for j in range(1, n)), Fraction(0))
            r.append(s / 2)
        return TruncatedSeries(r, self.order)

    def exp(self) -> "TruncatedSeries":
        """exp(f) for f(0) = 0, from E' = f' E"""
        if self.coefficients[0] != 0:
            raise SeriesDomainError("exp is only taken of series with zero constant term")
        d = [n * c for n, c in enumerate(self.coefficients)]
        e = [Fraction(1)]
        for n in range(1, self.order + 1):
            s = sum((d[j] * e[n - j] for j in range(1, n + 1)), Fraction(0))
            e.append(s / n)
        return TruncatedSeries(e, self.order)

    def substitute(self, g: "TruncatedSeries") -> "TruncatedSeries":
        """f(g(x)) for g(0) = 0, by Horner's rule"""
        if g.coefficients[0] != 0:
            raise SeriesDomainError("substitution needs g(0) = 0")
        order = min(self.order, g.order)
        g = g.truncate(order)
        out = TruncatedSeries.zero(order)
        for c in reversed(self.coefficients[:order + 1]):
            out = out * g + c
        return out


# ============================================
# POLYNOMIAL HELPERS
# ============================================

def polynomial(coefficients: Iterable, order: int) -> TruncatedSeries:
    """A polynomial as a series truncated (or zero-padded) at order"""
    return TruncatedSeries(list(coefficients), order)


def poly_derivative(a: list) -> list:
    return [n * c for n, c in enumerate(a)][1:]


def poly_trim(a: list) -> list:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out
