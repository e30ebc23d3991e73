from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from config.settings import SERIES_PROPERTY_ORDER
from utils.errors import SeriesDomainError
from utils.series import TruncatedSeries, poly_derivative, poly_trim, polynomial

ORDER = SERIES_PROPERTY_ORDER

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def series_with(c0):
    return st.lists(rationals, min_size=ORDER, max_size=ORDER).map(
        lambda tail: TruncatedSeries([c0] + tail, ORDER))


any_series = st.lists(rationals, min_size=ORDER + 1, max_size=ORDER + 1).map(
    lambda coeffs: TruncatedSeries(coeffs, ORDER))


def geometric(order):
    return TruncatedSeries([1] * (order + 1), order)


def test_geometric_reciprocal():
    one_minus_x = polynomial([1, -1], 8)
    assert one_minus_x.reciprocal() == geometric(8)


def test_catalan_from_sqrt():
    radicand = polynomial([1, -4], 11)
    catalan = (TruncatedSeries.one(11) - radicand.sqrt()).shift(-1).scale(Fraction(1, 2))
    assert catalan.integer_coefficients() == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def test_exp_of_x_plus_half_square():
    egf = polynomial([0, 1, Fraction(1, 2)], 8).exp()
    assert [egf[n] * factorial(n) for n in range(9)] == [1, 1, 2, 4, 10, 26, 76, 232, 764]


def test_substitute_x_over_one_minus_x():
    inner = polynomial([0, 1], 6) * polynomial([1, -1], 6).reciprocal()
    assert geometric(6).substitute(inner).integer_coefficients() == [1, 1, 2, 4, 8, 16, 32]


def test_shift_and_negation():
    s = polynomial([1, 2, 3], 4)
    assert s.shift(2).coefficients == tuple(Fraction(v) for v in (0, 0, 1, 2, 3))
    assert s.shift(2).shift(-2).order == 2
    assert s.negate_variable().coefficients[:3] == (1, -2, 3)
    with pytest.raises(SeriesDomainError):
        s.shift(-1)


def test_calculus_orders():
    s = polynomial([1, 1, 1, 1], 3)
    assert s.derivative().order == 2
    assert s.integrate(5).order == 4
    assert s.integrate(5)[0] == 5
    assert s.integrate().derivative() == s


@pytest.mark.parametrize("op,series", [
    ("reciprocal", polynomial([0, 1], 3)),
    ("sqrt", polynomial([2, 1], 3)),
    ("exp", polynomial([1, 1], 3)),
    ("derivative", TruncatedSeries.one(0)),
])
def test_domain_errors(op, series):
    with pytest.raises(SeriesDomainError):
        getattr(series, op)()


def test_substitute_needs_zero_constant():
    with pytest.raises(SeriesDomainError):
        geometric(4).substitute(polynomial([1, 1], 4))


def test_float_coefficients_rejected():
    with pytest.raises(SeriesDomainError):
        TruncatedSeries([0.5, 1])


def test_mixed_orders_truncate():
    assert (polynomial([1, 1], 5) + polynomial([1], 2)).order == 2
    assert (polynomial([1, 1], 5) * polynomial([1], 3)).order == 3


def test_integer_coefficients_rejects_fractions():
    with pytest.raises(SeriesDomainError):
        polynomial([1, Fraction(1, 2)], 1).integer_coefficients()


def test_poly_helpers():
    assert poly_derivative([1, 2, 3]) == [2, 6]
    assert poly_trim([1, 0, 0]) == [1]


@given(series_with(1))
def test_sqrt_squared(s):
    assert s.sqrt() * s.sqrt() == s


@given(series_with(1), st.fractions(min_value=-5, max_value=5).filter(bool))
def test_reciprocal_times_self(s, c0):
    t = s.scale(c0)
    assert (t * t.reciprocal()) == TruncatedSeries.one(ORDER)


@given(series_with(0))
def test_exp_of_negation(s):
    assert s.exp() * (-s).exp() == TruncatedSeries.one(ORDER)


@given(any_series, any_series)
def test_ring_laws(f, g):
    assert f * g == g * f
    assert (f + g) - g == f
    assert (f * g).derivative() == f.derivative() * g.truncate(ORDER - 1) + f.truncate(ORDER - 1) * g.derivative()
