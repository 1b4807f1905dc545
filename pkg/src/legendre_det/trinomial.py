"""Generalized trinomial coefficients.

``<n,k>_{b,c}`` is the coefficient of ``x**k`` in ``(x + b + c/x)**n``. Rows are
stored densely with offset indexing: position ``n + k`` holds ``<n,k>`` for
``-n <= k <= n``; reads outside that window return 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import IndexOutOfRange, WrongResidueClass
from .lucas import LucasSpec, lucas_sequence_mod
from .modarith import Fp2Element, FpElement, PrimeSquareRing, inv_mod, legendre, require_odd_prime


@dataclass(frozen=True, eq=False)
class TrinomialRow:
    n: int
    b: int
    c: int
    p: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        if len(self.coeffs) != 2 * self.n + 1:
            raise ValueError("row length must be 2n+1")
        self.coeffs.setflags(write=False)

    def __getitem__(self, k: int) -> int:
        if abs(k) > self.n:
            return 0
        return int(self.coeffs[self.n + k])

    def element(self, k: int) -> FpElement:
        return FpElement(self[k], self.p)

    def __eq__(self, other):
        if not isinstance(other, TrinomialRow):
            return NotImplemented
        return (self.n, self.b, self.c, self.p) == (other.n, other.b, other.c, other.p) and bool(
            np.array_equal(self.coeffs, other.coeffs)
        )

    def tolist(self) -> list[int]:
        return [int(v) for v in self.coeffs]


def _step(row: np.ndarray, b: int, c: int, modulus: int) -> np.ndarray:
    # <n,k> = <n-1,k-1> + b<n-1,k> + c<n-1,k+1>
    new = np.zeros(len(row) + 2, dtype=np.int64)
    new[2:] += row
    new[1:-1] += b * row
    new[:-2] += c * row
    return new % modulus


def _iterate(n: int, b: int, c: int, modulus: int) -> np.ndarray:
    b, c = b % modulus, c % modulus
    row = np.ones(1, dtype=np.int64) % modulus
    for _ in range(n):
        row = _step(row, b, c, modulus)
    return row


def _make(n: int, b: int, c: int, p: int, coeffs: np.ndarray) -> TrinomialRow:
    return TrinomialRow(n, b % p, c % p, p, coeffs)


def trinomial_row(n: int, b: int, c: int, p: int) -> TrinomialRow:
    """Row ``n`` by iterating the three-term recurrence from ``n = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    require_odd_prime(p)
    return _make(n, b, c, p, _iterate(n, b, c, p))


def next_row(row: TrinomialRow) -> TrinomialRow:
    return _make(row.n + 1, row.b, row.c, row.p, _step(row.coeffs, row.b, row.c, row.p))


def row_p_minus_2_direct(b: int, c: int, p: int) -> TrinomialRow:
    return trinomial_row(p - 2, b, c, p)


def row_p_minus_1_direct(b: int, c: int, p: int) -> TrinomialRow:
    return next_row(row_p_minus_2_direct(b, c, p))


def row_p_minus_1_lucas(b: int, c: int, p: int) -> TrinomialRow:
    """Row ``p-1`` in O(p) from Lucas values.

    ``<p-1, p-k> = u_k(-b, c)`` fills the nonnegative positions (position 0
    uses ``u_p``), and ``<p-1,-j> = c**j <p-1,j>`` fills the rest.
    """
    require_odd_prime(p)
    u = lucas_sequence_mod(p, LucasSpec(-b, c), p)
    n = p - 1
    coeffs = np.zeros(2 * n + 1, dtype=np.int64)
    cp = c % p
    cpow = 1
    for j in range(0, n + 1):
        v = u[p - j]
        coeffs[n + j] = v
        coeffs[n - j] = v * cpow % p
        cpow = cpow * cp % p
    return _make(n, b, c, p, coeffs)


def lemma21_rhs(k: int, row_p_minus_1: TrinomialRow, b: int, c: int) -> FpElement:
    """Value congruent to ``(4c - b^2) <p-2,k>`` computed from row ``p-1``."""
    p = row_p_minus_1.p
    if abs(k) > p - 2:
        raise IndexOutOfRange(f"|k| = {abs(k)} exceeds p-2 = {p - 2}")
    r = row_p_minus_1
    if k == 0:
        v = r[-1] + c * r[1] - b
    else:
        v = (k + 1) * r[k - 1] - (k - 1) * c * r[k + 1]
    return FpElement(v % p, p)


def row_p_minus_2(b: int, c: int, p: int) -> TrinomialRow:
    """Row ``p-2``, via row ``p-1`` when ``4c - b^2`` is a unit mod p."""
    require_odd_prime(p)
    disc = (4 * c - b * b) % p
    if disc == 0:
        return row_p_minus_2_direct(b, c, p)
    r = row_p_minus_1_lucas(b, c, p).coeffs
    n = p - 2
    ks = np.arange(-n, n + 1, dtype=np.int64)
    # r is indexed by (p-1) + k, so r[k-1] lives at n + k and r[k+1] at n + k + 2
    lower = r[0 : 2 * n + 1]
    upper = r[2 : 2 * n + 3]
    rhs = ((ks + 1) % p * lower % p - (ks - 1) % p * (c % p) % p * upper % p) % p
    rhs[n] = (r[n] + (c % p) * r[n + 2] - b) % p
    coeffs = rhs * inv_mod(disc, p) % p
    return _make(n, b, c, p, coeffs)


def expand_power_p_minus_2(b: int, c: int, p: int) -> list[FpElement]:
    """Coefficients of ``(x^2 + bx + c)^(p-2)`` mod p, degree 0 through 2p-4."""
    require_odd_prime(p)
    quad = np.array([c % p, b % p, 1], dtype=np.int64)
    poly = np.ones(1, dtype=np.int64)
    for _ in range(p - 2):
        poly = np.convolve(poly, quad) % p
    return [FpElement(int(v), p) for v in poly]


def fold_mod_xp_minus_x(coeffs, p: int) -> list[int]:
    """Reduce a polynomial modulo ``x^p - x`` (so ``x^(p-1+m) -> x^m`` for m >= 1)."""
    out = [0] * p
    for e, a in enumerate(coeffs):
        while e >= p:
            e -= p - 1
        out[e] = (out[e] + int(a)) % p
    return out


def grouped_coeffs(row_pm2: TrinomialRow) -> np.ndarray:
    """``U(k) = <p-2,k> + c^(p-1-k) <p-2,p-1-k>`` for k = 0..p-1 (index k)."""
    p, c = row_pm2.p, row_pm2.c
    vals = np.zeros(p, dtype=np.int64)
    for k in range(p):
        vals[k] = (row_pm2[k] + pow(c, p - 1 - k, p) * row_pm2[p - 1 - k]) % p
    return vals


def regrouped_expansion(b: int, c: int, p: int) -> list[int]:
    """Right-hand side of the grouped expansion of ``(x^2+bx+c)^(p-2)``.

    Degree ``<= p-1``; equal to the full expansion modulo ``x^p - x``.
    """
    row = row_p_minus_2_direct(b, c, p)
    grouped = grouped_coeffs(row)
    out = [0] * p
    out[0] = pow(c, p - 2, p)
    for k in range(2, p - 1):
        out[k - 1] = int(grouped[k])
    out[p - 2] = (out[p - 2] + row[0]) % p
    out[p - 1] = (out[p - 1] + row[1]) % p
    return out


def corollary21_coeffs(p: int) -> list[FpElement]:
    """Closed-form coefficients (degrees 0..p-1) of ``(x^2+x+1)^(p-2)`` reduced mod ``x^p - x``.

    Only valid for p = 1 (mod 3).
    """
    require_odd_prime(p)
    if p % 3 != 1:
        raise WrongResidueClass(f"p = {p} is not 1 mod 3")
    third = inv_mod(3, p)
    out = [0] * p
    out[0] = 1
    out[p - 1] = 2 * third % p
    out[p - 2] = -third % p
    for k in range(2, p - 1):
        iverson = 1 if (k - 1) % 3 == 0 else 0
        out[k - 1] = (k * legendre(k, 3) + iverson - third) % p
    return [FpElement(v, p) for v in out]


def central_trinomial_mod_p2(p: int) -> Fp2Element:
    """``T_p = <p-1, 0>_{1,1}`` modulo ``p^2``."""
    ring = PrimeSquareRing(p)
    row = _iterate(p - 1, 1, 1, ring.modulus)
    return ring(int(row[p - 1]))
