from math import comb, factorial

import pytest

from utils.errors import BinomialDomainError, FamilyParameterError
from utils.families import c_family, p_family, valid_c_params, valid_p_params
from utils.oracle import brute_force_refined, brute_force_sequence
from utils.recurrences import (
    FamilyParams,
    binomial,
    c_sequence,
    p_closed_form_l1,
    p_kth_value,
    p_sequence,
    p_sequence_full_range,
    recurrence_sequence,
    reference_sequence,
    refined_c_boundary,
)


def test_binomial_convention():
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1
    with pytest.raises(BinomialDomainError):
        binomial(-1, 0)


def test_catalan_to_twenty():
    seq = c_sequence(FamilyParams("C", 3, 1, 2), 20)
    assert list(seq) == [comb(2 * n, n) // (n + 1) for n in range(21)]
    assert seq[20] == 6564120420


def test_bell_from_l_equal_one():
    assert list(c_sequence(FamilyParams("C", 3, 1, 1), 7)) == [1, 1, 2, 5, 15, 52, 203, 877]


def test_anchor_does_not_enter():
    assert c_sequence(FamilyParams("C", 5, 1, 2), 10).values == c_sequence(FamilyParams("C", 5, 3, 2), 10).values


@pytest.mark.parametrize("k,a,l", valid_c_params(4))
def test_c_sequence_matches_oracle(k, a, l):
    assert c_sequence(FamilyParams("C", k, a, l), 7).values == brute_force_sequence(c_family(k, a, l), 7).values


@pytest.mark.parametrize("k,a,l", valid_p_params(4))
def test_p_sequence_matches_oracle(k, a, l):
    assert p_sequence(FamilyParams("P", k, a, l), 7).values == brute_force_sequence(p_family(k, a, l), 7).values


def test_p_sequence_values():
    assert list(p_sequence(FamilyParams("P", 4, 1, 2), 9)) == [1, 1, 2, 6, 20, 76, 312, 1384, 6512, 32400]
    assert list(p_sequence(FamilyParams("P", 5, 1, 1), 8)) == [1, 1, 2, 6, 24, 96, 384, 1536, 6144]


def test_involutions_for_k_three():
    assert p_sequence(FamilyParams("P", 3, 2, 2), 12).values == reference_sequence("involutions", 12).values


@pytest.mark.parametrize("k", range(3, 7))
def test_closed_form_l1(k):
    seq = p_sequence(FamilyParams("P", k, 1, 1), 15)
    for n in range(k - 1, 16):
        assert seq[n] == p_closed_form_l1(k, n)
    assert seq[k] == p_kth_value(k) == factorial(k) - factorial(k - 1)


def test_closed_form_domain():
    with pytest.raises(FamilyParameterError):
        p_closed_form_l1(4, 2)


@pytest.mark.parametrize("k,a,l", valid_p_params(6))
def test_p_recurrence_from_k_minus_l(k, a, l):
    params = FamilyParams("P", k, a, l)
    assert p_sequence_full_range(params, 12).values == p_sequence(params, 12).values


@pytest.mark.parametrize("k,a,l", [(3, 1, 2), (4, 1, 2), (4, 2, 1), (5, 1, 3), (5, 2, 2)])
def test_refined_boundary_matches_oracle(k, a, l):
    params = FamilyParams("C", k, a, l)
    fam = c_family(k, a, l)
    for n in range(k, 8):
        for i in range(1, n - k + 2):
            assert refined_c_boundary(params, n, i) == brute_force_refined(fam, n, (n - k + a + 1 - i,))


def test_refined_boundary_range():
    params = FamilyParams("C", 4, 1, 2)
    with pytest.raises(FamilyParameterError):
        refined_c_boundary(params, 6, 4)
    with pytest.raises(FamilyParameterError):
        refined_c_boundary(params, 3, 1)


def test_reference_sequences():
    assert list(reference_sequence("bell", 7)) == [1, 1, 2, 5, 15, 52, 203, 877]
    assert list(reference_sequence("motzkin", 7)) == [1, 1, 2, 4, 9, 21, 51, 127]
    assert list(reference_sequence("involutions", 7)) == [1, 1, 2, 4, 10, 26, 76, 232]
    assert list(reference_sequence("catalan", 0)) == [1]
    with pytest.raises(FamilyParameterError):
        reference_sequence("fibonacci", 5)


def test_family_params_validation():
    with pytest.raises(FamilyParameterError):
        FamilyParams("C", 4, 3, 2)
    with pytest.raises(FamilyParameterError):
        FamilyParams("Q", 4, 1, 2)
    assert FamilyParams("p", 4, 1, 2).kind == "P"
    with pytest.raises(FamilyParameterError):
        c_sequence(FamilyParams("P", 4, 1, 2), 5)


def test_recurrence_dispatch():
    assert recurrence_sequence(FamilyParams("P", 3, 1, 2), 5).values == (1, 1, 2, 4, 10, 26)
    assert recurrence_sequence(FamilyParams("C", 3, 1, 2), 5).values == (1, 1, 2, 5, 14, 42)


@pytest.mark.parametrize("k,a,l", valid_c_params(6))
def test_c_sequence_drops_below_factorial_at_k(k, a, l):
    values = c_sequence(FamilyParams("C", k, a, l), k).values
    assert values[k - 1] == factorial(k - 1)
    assert values[k] < factorial(k)


@pytest.mark.parametrize("k,a,l", valid_p_params(6))
def test_p_sequence_drops_below_factorial_at_k(k, a, l):
    values = p_sequence(FamilyParams("P", k, a, l), k).values
    assert values[k - 1] == factorial(k - 1)
    assert values[k] < factorial(k)
