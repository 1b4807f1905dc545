"""Arithmetic in Z/pZ and Z/p^2Z.

Elements are always stored fully reduced. Negative integers are reduced with
Python's floor-mod, so ``PrimeField(5)(-2).value == 3``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

from .exceptions import NotAnOddPrime


def is_prime(n: int) -> bool:
    """Deterministic trial division; meant for desk-scale moduli."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def is_odd_prime(n: int) -> bool:
    return n != 2 and is_prime(n)


def require_odd_prime(p: int) -> int:
    if not is_odd_prime(p):
        raise NotAnOddPrime(f"{p} is not an odd prime")
    return p


def primes_in_range(pmin: int, pmax: int) -> list[int]:
    """Ascending primes in ``[pmin, pmax]`` via the sieve of Eratosthenes."""
    if pmax < 2 or pmax < pmin:
        return []
    sieve = np.ones(pmax + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, isqrt(pmax) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return [int(q) for q in np.flatnonzero(sieve) if q >= pmin]


def odd_primes(pmin: int, pmax: int) -> list[int]:
    return primes_in_range(max(pmin, 3), pmax)


@lru_cache(maxsize=None)
def _checked(p: int) -> int:
    return require_odd_prime(p)


@dataclass(frozen=True, slots=True)
class FpElement:
    """A residue ``value`` in ``[0, modulus)`` for an odd prime ``modulus``."""

    value: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus}")

    def _coerce(self, other) -> int:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other)
        return NotImplemented

    def _new(self, v: int) -> "FpElement":
        return FpElement(v % self.modulus, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, exponent: int):
        return mod_pow(self, exponent)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o % self.modulus == 0:
            raise ZeroDivisionError(f"division by zero mod {self.modulus}")
        return self._new(self.value * pow(o, -1, self.modulus))

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus}")
        return self._new(pow(self.value, -1, self.modulus))

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, (int, np.integer)):
            return (int(other) - self.value) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


class PrimeField:
    """Field context F_p; checks primality once at construction."""

    def __init__(self, p: int):
        self.p = _checked(p)

    def __call__(self, a: int) -> FpElement:
        return FpElement(int(a) % self.p, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


@dataclass(frozen=True, slots=True)
class Fp2Element:
    """A residue modulo ``p**2``."""

    value: int
    modulus_squared: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus_squared:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus_squared}")

    def __add__(self, other: "Fp2Element | int") -> "Fp2Element":
        o = other.value if isinstance(other, Fp2Element) else int(other)
        return Fp2Element((self.value + o) % self.modulus_squared, self.modulus_squared)

    def __mul__(self, other: "Fp2Element | int") -> "Fp2Element":
        o = other.value if isinstance(other, Fp2Element) else int(other)
        return Fp2Element((self.value * o) % self.modulus_squared, self.modulus_squared)

    def __eq__(self, other):
        if isinstance(other, Fp2Element):
            return self.value == other.value and self.modulus_squared == other.modulus_squared
        if isinstance(other, int):
            return (other - self.value) % self.modulus_squared == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus_squared))


class PrimeSquareRing:
    """Ring context Z/p^2Z, kept apart from :class:`PrimeField`."""

    def __init__(self, p: int):
        self.p = _checked(p)
        self.modulus = p * p

    def __call__(self, a: int) -> Fp2Element:
        return Fp2Element(int(a) % self.modulus, self.modulus)


def mod_pow(base: FpElement, exponent: int) -> FpElement:
    """``base**exponent`` by square-and-multiply; ``0**0 == 1``."""
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    p = base.modulus
    result, b, e = 1, base.value, exponent
    while e:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return FpElement(result % p, p)


def fermat_entry(a: FpElement) -> FpElement:
    """``a**(p-2)``: the inverse of ``a`` when nonzero, else 0."""
    return mod_pow(a, a.modulus - 2)


def inv_mod(a: int, p: int) -> int:
    return pow(a % p, -1, p)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    if r == p - 1:
        return -1
    return r
