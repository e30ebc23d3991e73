from fractions import Fraction
from math import factorial

import pytest
import sympy

from utils.errors import FamilyParameterError, IdentityError
from utils.families import c_family, classical_centralizer_set, classical_parabolic_set
from utils.generating_functions import (
    LINEAR_TERM_PRINTED,
    bd1_gf,
    c_counts_from_gf,
    f_poly,
    laguerre_polynomial,
    main12_residual,
    par_closed_form_gf,
    par_identity_residual,
    par_rhs,
    rook_placements,
    rook_polynomial,
    rook_polynomial_from_laguerre,
    tp1_egf_counts,
    tp1_egf_series,
)
from utils.oracle import brute_force_sequence
from utils.recurrences import FamilyParams, c_sequence, p_sequence, reference_sequence

C_PAIRS = [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4)]


def test_f_poly_l2_is_binomial_power():
    assert f_poly(4, 2, 6).integer_coefficients() == [1, -4, 6, -4, 1, 0, 0]


def test_f_poly_truncation():
    assert f_poly(3, 3, 4).integer_coefficients() == [1, -2, 0, 0, 0]
    assert f_poly(5, 3, 4).integer_coefficients() == [1, -4, 3, 0, 0]
    with pytest.raises(FamilyParameterError):
        f_poly(3, 1, 4)


@pytest.mark.parametrize("k,l", C_PAIRS)
def test_c_ogf_residual_is_zero(k, l):
    report = main12_residual(FamilyParams("C", k, 1, l), 12)
    assert report.is_zero
    assert report.to_dict()["first_nonzero_index"] == "zero"


@pytest.mark.parametrize("k,l", [(4, 3), (5, 3), (5, 4)])
def test_printed_linear_term_leaves_single_residual(k, l):
    report = main12_residual(FamilyParams("C", k, 1, l), 12, linear_term=LINEAR_TERM_PRINTED)
    assert report.residual.first_nonzero_index() == k - 1
    assert report.residual[k - 1] == -(l - 2) * factorial(k - 2)
    assert sum(1 for c in report.residual if c) == 1


@pytest.mark.parametrize("k", [3, 4, 5])
def test_printed_linear_term_agrees_at_l2(k):
    assert main12_residual(FamilyParams("C", k, 1, 2), 12, linear_term=LINEAR_TERM_PRINTED).is_zero


def test_c_ogf_residual_with_oracle_counts():
    params = FamilyParams("C", 4, 1, 2)
    counts = brute_force_sequence(c_family(4, 1, 2), 7).values
    assert main12_residual(params, 7, values=counts).is_zero


def test_c_ogf_residual_detects_wrong_counts():
    params = FamilyParams("C", 4, 1, 2)
    counts = list(c_sequence(params, 8))
    counts[6] += 1
    report = main12_residual(params, 8, values=counts)
    assert report.to_dict()["first_nonzero_index"] == 6


def test_residual_detail_is_deterministic():
    params = FamilyParams("C", 4, 1, 2)
    first = main12_residual(params, 10).to_dict()
    assert "elapsed" not in first
    assert first == main12_residual(params, 10).to_dict()
    assert par_identity_residual(2, 2, 1, 7).to_dict() == par_identity_residual(2, 2, 1, 7).to_dict()


def test_c_ogf_rejects_l1():
    with pytest.raises(FamilyParameterError):
        main12_residual(FamilyParams("C", 4, 1, 1), 8)


@pytest.mark.parametrize("k,l", C_PAIRS + [(6, 3)])
def test_c_counts_from_gf(k, l):
    params = FamilyParams("C", k, 1, l)
    assert c_counts_from_gf(params, 12).values == c_sequence(params, 12).values


def test_c_counts_from_gf_values():
    assert list(c_counts_from_gf(FamilyParams("C", 4, 1, 2), 7)) == [1, 1, 2, 6, 22, 92, 426, 2150]


@pytest.mark.parametrize("k,l", [(k, l) for k in range(3, 7) for l in range(1, k)])
def test_p_egf_matches_recurrence(k, l):
    assert tp1_egf_counts(k, l, 12).values == p_sequence(FamilyParams("P", k, 1, l), 12).values


@pytest.mark.parametrize("k,l", [(3, 2), (4, 2), (4, 3), (5, 3)])
def test_printed_exponent_fails_for_l_at_least_two(k, l):
    reference = p_sequence(FamilyParams("P", k, 1, l), 9).values
    try:
        values = tp1_egf_counts(k, l, 9, exponent=k - 1).values
    except IdentityError:
        return
    assert values != reference


def test_involutions_from_egf():
    assert tp1_egf_counts(3, 2, 12).values == reference_sequence("involutions", 12).values


def test_egf_l_equal_k_minus_one_has_no_integration():
    series = tp1_egf_series(4, 3, 3)
    assert series[0] == 1
    assert series[3] * factorial(3) == 6


def test_centralizer_ogf():
    assert bd1_gf(3, 8).integer_coefficients() == list(reference_sequence("catalan", 8))
    assert bd1_gf(4, 8).integer_coefficients() == [1, 1, 2, 6, 22, 90, 394, 1806, 8558]
    assert bd1_gf(5, 8).integer_coefficients() == [1, 1, 2, 6, 24, 114, 600, 3372, 19824]


def test_centralizer_ogf_matches_oracle_prefix_reading():
    assert list(brute_force_sequence(classical_centralizer_set(4), 7)) == bd1_gf(4, 7).integer_coefficients()


@pytest.mark.parametrize("n,alpha", [(n, alpha) for n in range(6) for alpha in range(4)])
def test_laguerre_against_sympy(n, alpha):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.expand(sympy.assoc_laguerre(n, alpha, x)), x).all_coeffs()[::-1]
    got = laguerre_polynomial(n, alpha)
    assert [Fraction(int(c.p), int(c.q)) for c in expected] == list(got.coefficients)


@pytest.mark.parametrize("s,t", [(s, t) for s in range(1, 5) for t in range(1, 5)])
def test_rook_polynomial_routes(s, t):
    closed = rook_polynomial(s, t).integer_coefficients()
    assert closed == rook_polynomial_from_laguerre(s, t).integer_coefficients()
    assert closed == rook_placements(s, t)


def test_rook_polynomial_2x3():
    assert rook_polynomial(2, 3).integer_coefficients() == [1, 6, 6]


@pytest.mark.parametrize("l,m,a", [(1, 1, 1), (1, 2, 3), (2, 2, 2), (2, 3, 1), (3, 3, 4)])
def test_parabolic_residual(l, m, a):
    assert par_identity_residual(l, m, a, 7).is_zero


@pytest.mark.parametrize("l,m", [(l, m) for l in range(1, 4) for m in range(1, 4)])
def test_parabolic_closed_form_matches_oracle(l, m):
    closed = par_closed_form_gf(l, m, 7).integer_coefficients()
    assert closed == list(brute_force_sequence(classical_parabolic_set(l, m, 1), 7))


def test_parabolic_sequences():
    assert par_closed_form_gf(1, 2, 7).integer_coefficients() == [1, 1, 2, 4, 8, 16, 32, 64]
    assert par_closed_form_gf(1, 3, 7).integer_coefficients() == [1, 1, 2, 6, 18, 54, 162, 486]
    assert par_closed_form_gf(2, 2, 7).integer_coefficients() == [1, 1, 2, 6, 20, 68, 232, 792]
    assert par_closed_form_gf(3, 3, 7).integer_coefficients() == [1, 1, 2, 6, 24, 120, 684, 4140]


def test_parabolic_rhs_integral():
    assert all(c.denominator == 1 for c in par_rhs(3, 3, 8))
