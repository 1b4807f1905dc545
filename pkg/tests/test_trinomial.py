from math import comb

import pytest

from legendre_det.exceptions import IndexOutOfRange, WrongResidueClass
from legendre_det.modarith import legendre, odd_primes
from legendre_det.trinomial import (
    central_trinomial_mod_p2,
    corollary21_coeffs,
    expand_power_p_minus_2,
    fold_mod_xp_minus_x,
    grouped_coeffs,
    lemma21_rhs,
    regrouped_expansion,
    next_row,
    row_p_minus_1_direct,
    row_p_minus_1_lucas,
    row_p_minus_2,
    row_p_minus_2_direct,
    trinomial_row,
)
from oracles import laurent_power, poly_pow

GRID = [(b, c) for b in range(-3, 4) for c in range(-3, 4)]


def test_row_zero():
    for b, c, p in [(0, 0, 3), (2, -1, 7), (3, 3, 101)]:
        assert trinomial_row(0, b, c, p).tolist() == [1]


def test_row_binomial_case():
    assert trinomial_row(2, 2, 1, 101).tolist() == [1, 4, 6, 4, 1]
    for n in range(8):
        row = trinomial_row(n, 2, 1, 101)
        assert [row[k] for k in range(-n, n + 1)] == [comb(2 * n, n + k) % 101 for k in range(-n, n + 1)]


def test_row_b1_c2():
    assert trinomial_row(2, 1, 2, 101).tolist() == [4, 4, 5, 2, 1]


def test_out_of_window_reads_zero():
    row = trinomial_row(3, 1, 1, 7)
    assert row[4] == 0 and row[-10] == 0


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_rows_match_exact_expansion(p):
    for b, c in GRID:
        for n in (1, 2, 5, 17, 40):
            exact = laurent_power(n, b, c)
            row = trinomial_row(n, b, c, p)
            assert all(row[k] == exact.get(k, 0) % p for k in range(-n - 1, n + 2))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_recurrence_holds(p):
    for b, c in GRID:
        prev = trinomial_row(0, b, c, p)
        for n in range(1, 41):
            row = trinomial_row(n, b, c, p)
            for k in range(-n, n + 1):
                assert row[k] == (prev[k - 1] + b * prev[k] + c * prev[k + 1]) % p
            prev = row


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_symmetry_multiplicative(p):
    for b, c in GRID:
        if c % p == 0:
            continue
        for n in (3, 10, 25):
            row = trinomial_row(n, b, c, p)
            assert all(pow(c, k, p) * row[k] % p == row[-k] for k in range(n + 1))


def test_row_sum_is_value_at_one():
    for p in (7, 13):
        for b, c in GRID:
            row = trinomial_row(9, b, c, p)
            assert sum(row.tolist()) % p == pow(1 + b + c, 9, p)


def test_small_direct_rows():
    assert row_p_minus_2_direct(1, 1, 3).tolist() == [1, 1, 1]
    assert row_p_minus_1_direct(1, 1, 5)[4] == 1


def test_row_pm1_symbol_at_7():
    row = row_p_minus_1_direct(1, 1, 7)
    assert [row[7 - k] for k in range(8)] == [legendre(k, 3) % 7 for k in range(8)]


def test_row_p_collapse():
    for p in odd_primes(3, 47):
        for b, c in GRID:
            row = next_row(row_p_minus_1_direct(b, c, p))
            assert row[0] == b % p and row[p] == 1 and row[-p] == c % p
            assert all(row[k] == 0 for k in range(1, p)) and all(row[-k] == 0 for k in range(1, p))


def test_lucas_row_endpoints():
    row = row_p_minus_1_lucas(2, 3, 11)
    assert row[10] == 1  # k = 1
    assert row[11] == 0  # k = 0


def test_lucas_row_matches_direct():
    assert row_p_minus_1_lucas(1, 1, 7) == row_p_minus_1_direct(1, 1, 7)
    for p in odd_primes(3, 199):
        for b, c in GRID:
            if c % p:
                assert row_p_minus_1_lucas(b, c, p) == row_p_minus_1_direct(b, c, p), (p, b, c)


def test_lucas_row_with_c_divisible_by_p():
    # the multiplicative symmetry needs no inverse of c
    for p in (3, 5, 7):
        assert row_p_minus_1_lucas(2, p, p) == row_p_minus_1_direct(2, p, p)


def test_fast_p_minus_2_row_matches_direct():
    for p in odd_primes(3, 97):
        for b, c in GRID:
            assert row_p_minus_2(b, c, p) == row_p_minus_2_direct(b, c, p), (p, b, c)


def test_row_relation_examples():
    row1 = row_p_minus_1_direct(1, 1, 7)
    row2 = row_p_minus_2_direct(1, 1, 7)
    assert lemma21_rhs(0, row1, 1, 1).value == 3 * row2[0] % 7
    assert lemma21_rhs(5, row1, 1, 1).value == 3
    assert lemma21_rhs(1, row_p_minus_1_direct(2, 1, 5), 2, 1).value == 0


def test_row_relation_index_guard():
    row1 = row_p_minus_1_direct(1, 1, 7)
    with pytest.raises(IndexOutOfRange):
        lemma21_rhs(6, row1, 1, 1)


def test_row_relation_all_small():
    for p in odd_primes(3, 31):
        for b, c in GRID:
            row1, row2 = row_p_minus_1_direct(b, c, p), row_p_minus_2_direct(b, c, p)
            for k in range(-(p - 2), p - 1):
                assert lemma21_rhs(k, row1, b, c).value == (4 * c - b * b) * row2[k] % p


def test_expand_small():
    assert [e.value for e in expand_power_p_minus_2(2, 1, 3)] == [1, 2, 1]
    assert [e.value for e in expand_power_p_minus_2(-1, -2, 3)] == [1, 2, 1]
    assert expand_power_p_minus_2(1, 1, 7)[0].value == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_expand_matches_repeated_squaring(p):
    for b, c in GRID:
        expected = poly_pow([c % p, b % p, 1], p - 2, p)
        assert [e.value for e in expand_power_p_minus_2(b, c, p)] == expected


def test_expansion_coefficients_are_row():
    p = 13
    for b, c in GRID:
        row = row_p_minus_2_direct(b, c, p)
        assert [e.value for e in expand_power_p_minus_2(b, c, p)] == row.tolist()


def test_fold():
    # x^5 + x^3 + 1 modulo x^3 - x  ->  2x + 1
    assert fold_mod_xp_minus_x([1, 0, 0, 1, 0, 1], 3) == [1, 2, 0]
    assert fold_mod_xp_minus_x([3, 0, 0, 2, 0, 1], 5) == [3, 1, 0, 2, 0]


def test_regrouping_matches_fold():
    for p in odd_primes(3, 47):
        for b, c in GRID:
            direct = fold_mod_xp_minus_x(expand_power_p_minus_2(b, c, p), p)
            assert regrouped_expansion(b, c, p) == direct, (p, b, c)


def test_grouped_coeffs_symmetry():
    for p in (7, 11, 13):
        for b, c in GRID:
            if c == 0:
                continue
            U = grouped_coeffs(row_p_minus_2_direct(b, c, p))
            for k in range(1, p):
                assert U[p - 1 - k] == pow(c, k, p) * U[k] % p


def test_closed_coeffs_examples():
    assert corollary21_coeffs(7)[6].value == 3
    assert corollary21_coeffs(13)[11].value == 4
    direct = fold_mod_xp_minus_x(expand_power_p_minus_2(1, 1, 7), 7)
    assert [e.value for e in corollary21_coeffs(7)] == direct


def test_closed_coeffs_class_guard():
    with pytest.raises(WrongResidueClass):
        corollary21_coeffs(11)


def test_closed_coeffs_range():
    for p in odd_primes(7, 199):
        if p % 3 == 1:
            direct = fold_mod_xp_minus_x(expand_power_p_minus_2(1, 1, p), p)
            assert [e.value for e in corollary21_coeffs(p)] == direct


def test_central_trinomial_mod_p2_examples():
    assert central_trinomial_mod_p2(5).value == 19
    assert central_trinomial_mod_p2(7).value == 43
    assert central_trinomial_mod_p2(11).value == laurent_power(10, 1, 1)[0] % 121
    assert central_trinomial_mod_p2(11).value == legendre(11, 3) * 3**10 % 121
