import random

import pytest
from hypothesis import given, strategies as st

from legendre_det.exceptions import NotAnOddPrime
from legendre_det.modarith import (
    FpElement,
    PrimeField,
    PrimeSquareRing,
    fermat_entry,
    is_prime,
    legendre,
    mod_pow,
    odd_primes,
    primes_in_range,
)
from oracles import is_prime_brute, legendre_by_squares

SMALL_PRIMES = [q for q in range(3, 98) if is_prime_brute(q)]


def test_mod_pow_examples():
    F7 = PrimeField(7)
    assert mod_pow(F7(2), 3) == FpElement(1, 7)
    assert mod_pow(PrimeField(5)(3), 4).value == 1
    for p in (3, 7, 101):
        for a in range(p):
            assert mod_pow(PrimeField(p)(a), 0).value == 1


def test_mod_pow_matches_repeated_multiplication():
    rng = random.Random(7)
    for _ in range(200):
        p = rng.choice(SMALL_PRIMES)
        a, e = rng.randrange(p), rng.randrange(0, 60)
        expected = 1
        for _ in range(e):
            expected = expected * a % p
        assert mod_pow(FpElement(a, p), e).value == expected


def test_mod_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        mod_pow(FpElement(2, 7), -1)


def test_fermat_entry_examples():
    assert fermat_entry(FpElement(0, 7)).value == 0
    assert fermat_entry(FpElement(3, 7)).value == 5
    assert fermat_entry(FpElement(1, 13)).value == 1


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_fermat_entry_is_inverse(p):
    F = PrimeField(p)
    for a in range(1, p):
        assert (fermat_entry(F(a)) * a).value == 1


def test_legendre_examples():
    assert legendre(0, 7) == 0
    assert legendre(-2, 5) == -1
    assert legendre(2, 17) == 1


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_legendre_matches_square_enumeration(p):
    for a in range(-p, 2 * p):
        assert legendre(a, p) == legendre_by_squares(a, p)


@given(st.sampled_from(SMALL_PRIMES), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_legendre_periodic_and_multiplicative(p, a, b):
    assert legendre(a + p, p) == legendre(a, p)
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_negative_inputs_reduce_with_floor_mod():
    assert PrimeField(5)(-2).value == 3
    assert PrimeField(7)(-14).value == 0


def test_element_arithmetic():
    F = PrimeField(11)
    a, b = F(7), F(9)
    assert (a + b).value == 5
    assert (a - b).value == 9
    assert (a * b).value == 8
    assert (a / b * b) == a
    assert (-a).value == 4
    assert (a ** 10).value == 1
    assert a.inverse() * a == 1
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()


def test_element_must_be_reduced():
    with pytest.raises(ValueError):
        FpElement(7, 7)


def test_field_context_checks_primality():
    for bad in (1, 2, 9, 15, 91):
        with pytest.raises(NotAnOddPrime):
            PrimeField(bad)


def test_prime_square_ring():
    R = PrimeSquareRing(5)
    assert R(-81).value == 19
    assert (R(20) * 3).value == 10


def test_is_prime_against_brute_force():
    assert [n for n in range(200) if is_prime(n)] == [n for n in range(200) if is_prime_brute(n)]


def test_primes_in_range():
    assert primes_in_range(3, 20) == [3, 5, 7, 11, 13, 17, 19]
    assert primes_in_range(14, 16) == []
    assert primes_in_range(2, 2) == [2]
    assert odd_primes(2, 10) == [3, 5, 7]
    assert primes_in_range(1, 1000) == [n for n in range(1000) if is_prime_brute(n)]
