from math import factorial

import pytest

from utils.errors import CeilingExceededError, PrefixError
from utils.families import (
    build_family,
    c_family,
    classical_centralizer_set,
    explicit_family,
    p_family,
    valid_c_params,
    valid_p_params,
)
from utils.oracle import (
    MATCHER_COMPILED,
    MATCHER_NAIVE,
    CountSequence,
    brute_force_count,
    brute_force_refined,
    brute_force_sequence,
    iter_avoiders,
    refined_table,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]
BELL = [1, 1, 2, 5, 15, 52, 203, 877]
INVOLUTIONS = [1, 1, 2, 4, 10, 26, 76, 232]


def test_catalan_family():
    assert brute_force_sequence(c_family(3, 1, 2), 7).values == tuple(CATALAN)


def test_bell_family():
    assert brute_force_sequence(c_family(3, 1, 1), 7).values == tuple(BELL)


@pytest.mark.parametrize("a", [1, 2])
def test_involution_families(a):
    assert brute_force_sequence(p_family(3, a, 2), 7).values == tuple(INVOLUTIONS)


def test_p_family_values():
    assert list(brute_force_sequence(p_family(4, 1, 2), 7)) == [1, 1, 2, 6, 20, 76, 312, 1384]
    assert list(brute_force_sequence(p_family(3, 1, 1), 7)) == [1, 1, 2, 4, 8, 16, 32, 64]


def test_centralizer_values():
    assert list(brute_force_sequence(classical_centralizer_set(4), 7)) == [1, 1, 2, 6, 22, 90, 394, 1806]


def test_small_n_is_factorial():
    fam = c_family(5, 1, 2)
    assert [brute_force_count(fam, n) for n in range(5)] == [1, 1, 2, 6, 24]


ORACLE_FAMILIES = [("C", *params) for params in valid_c_params(5)] + [("P", *params) for params in valid_p_params(5)]


@pytest.mark.parametrize("kind,k,a,l", ORACLE_FAMILIES)
def test_counts_bounded_by_factorial(kind, k, a, l):
    fam = build_family(kind, k, a, l)
    values = brute_force_sequence(fam, 7).values
    assert values[k - 1] == factorial(k - 1)
    assert values[k] < factorial(k)
    assert all(v <= factorial(n) for n, v in enumerate(values))
    if all(any(x < y for x, y in zip(p.word, p.word[1:])) for p in fam):
        assert all(v >= 1 for v in values)


def test_matcher_modes_agree():
    fam = c_family(4, 2, 1)
    counts = {mode: brute_force_count(fam, 6, matcher=mode) for mode in ("auto", MATCHER_NAIVE, MATCHER_COMPILED)}
    assert len(set(counts.values())) == 1


def test_parallel_count_matches_serial():
    fam = c_family(4, 1, 2)
    assert brute_force_count(fam, 7, jobs=2) == brute_force_count(fam, 7, jobs=1)
    assert brute_force_refined(fam, 7, (3,), jobs=2) == brute_force_refined(fam, 7, (3,))


def test_refined_counts():
    fam = c_family(3, 1, 2)
    assert brute_force_refined(fam, 3, (1,)) == 1
    assert brute_force_refined(fam, 4, (2,)) == 3
    assert brute_force_refined(fam, 4, (1,)) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_refined_partition_by_first_letter(n):
    fam = p_family(4, 2, 2)
    assert sum(brute_force_refined(fam, n, (i,)) for i in range(1, n + 1)) == brute_force_count(fam, n)


def test_refined_table_matches_refined():
    fam = p_family(4, 1, 2)
    table = refined_table(fam, 6, 2)
    assert table[()] == 76
    for prefix in [(1,), (4,), (2, 1), (5, 6), (6, 5)]:
        assert table[prefix] == brute_force_refined(fam, 6, prefix)


@pytest.mark.parametrize("prefix", [(2, 2), (0,), (5,), (1, 2, 3, 4, 5)])
def test_bad_prefix(prefix):
    with pytest.raises(PrefixError):
        brute_force_refined(c_family(3, 1, 2), 4, prefix)


def test_ceiling():
    fam = c_family(3, 1, 2)
    with pytest.raises(CeilingExceededError):
        brute_force_count(fam, 10)
    with pytest.raises(CeilingExceededError):
        brute_force_count(fam, 12, force=True)
    with pytest.raises(CeilingExceededError):
        brute_force_count(fam, -1)
    with pytest.raises(CeilingExceededError):
        brute_force_sequence(fam, 6, ceiling=5)


def test_iter_avoiders_lexicographic():
    words = [str(pi) for pi in iter_avoiders(explicit_family(["13-2"]), 3)]
    assert words == ["123", "213", "231", "312", "321"]
    assert [str(pi) for pi in iter_avoiders(explicit_family(["1-2"]), 2)] == ["21"]


def test_iter_avoiders_with_prefix():
    words = [pi.word for pi in iter_avoiders(c_family(3, 1, 2), 4, (2,))]
    assert len(words) == 3
    assert all(w[0] == 2 for w in words)


def test_count_sequence_exports():
    seq = CountSequence((1, 1, 2, 5), label="C(k=3,a=1,l=2)", method="oracle")
    assert seq.to_csv().splitlines() == ["n,count", "0,1", "1,1", "2,2", "3,5"]
    assert seq.to_dict({"k": 3})["values"] == ["1", "1", "2", "5"]
    assert seq.first_divergence([1, 1, 2, 6]) == 3
    assert seq.first_divergence([1, 1]) is None
    with pytest.raises(ValueError):
        CountSequence((1, -1))


def test_count_sequence_big_values_in_csv():
    big = 10 ** 30
    assert CountSequence((1, big)).to_csv().splitlines()[-1] == f"1,{big}"
