"""Dense matrices over F_p and the determinants built from them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .modarith import FpElement, legendre, require_odd_prime

# int64 outer products need p^2 < 2^63
MAX_MODULUS = 3_000_000_000


@dataclass(frozen=True, eq=False)
class MatrixFp:
    """Square matrix over F_p stored as a row-major int64 array."""

    p: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = self.entries
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError("matrix must be square with dim >= 1")
        if a.dtype != np.int64:
            raise TypeError("entries must be int64")
        if a.size and (a.min() < 0 or a.max() >= self.p):
            raise ValueError(f"entries must be reduced mod {self.p}")
        a.setflags(write=False)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int) -> "MatrixFp":
        return cls(p, np.asarray([[int(v) % p for v in r] for r in rows], dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, ij: tuple[int, int]) -> FpElement:
        return FpElement(int(self.entries[ij]), self.p)


def det_mod_p(m: MatrixFp) -> FpElement:
    """Determinant by Gaussian elimination over F_p on a private copy."""
    p = m.p
    if p >= MAX_MODULUS:
        raise ValueError(f"modulus {p} too large for int64 elimination")
    a = m.entries.copy()
    n = a.shape[0]
    # each update subtracts f*r with 0 <= f, r < p, so unreduced entries stay
    # below n*p^2 + p in magnitude; reduce the block only if that could overflow
    lazy = n * p * p + p < 2**63
    det = 1
    for k in range(n):
        col = a[k:, k]
        np.remainder(col, p, out=col)
        nz = np.flatnonzero(col)
        if nz.size == 0:
            return FpElement(0, p)
        piv = k + int(nz[0])
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            det = -det
        pivot = int(a[k, k])
        det = det * pivot % p
        if k + 1 < n:
            row = a[k, k + 1 :]
            np.remainder(row, p, out=row)
            factors = a[k + 1 :, k] * pow(pivot, -1, p) % p
            block = a[k + 1 :, k + 1 :]
            block -= np.outer(factors, row)
            if not lazy:
                np.remainder(block, p, out=block)
    return FpElement(det % p, p)


def det_exact(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [[int(v) for v in r] for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def _fermat_matrix(values: np.ndarray, p: int) -> np.ndarray:
    # elementwise v^(p-2) mod p by square-and-multiply; 0 stays 0
    result = np.ones_like(values)
    base = values % p
    e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def quadratic_form_grid(p: int, b: int, c: int, lo: int = 1, hi: int | None = None) -> np.ndarray:
    """Residues of ``i^2 + b*i*j + c*j^2`` for ``lo <= i, j <= hi`` (default ``p-1``)."""
    hi = p - 1 if hi is None else hi
    idx = np.arange(lo, hi + 1, dtype=np.int64)
    i, j = idx[:, None], idx[None, :]
    return (i * i % p + (b % p) * (i * j % p) % p + (c % p) * (j * j % p) % p) % p


def build_dp_matrix(p: int, b: int, c: int) -> MatrixFp:
    """The matrix ``[(i^2 + bij + cj^2)^(p-2)]`` for ``1 <= i, j <= p-1``."""
    require_odd_prime(p)
    return MatrixFp(p, _fermat_matrix(quadratic_form_grid(p, b, c), p))


def dp_det_mod_p(p: int, b: int, c: int) -> FpElement:
    return det_mod_p(build_dp_matrix(p, b, c))


def compute_dp_symbol(p: int, b: int, c: int) -> int:
    return legendre(dp_det_mod_p(p, b, c).value, p)


def build_inverse_matrix(p: int, b: int, c: int, size: int) -> MatrixFp:
    """``[1/(i^2 + bij + cj^2)]`` mod p for ``1 <= i, j <= size`` (0 where not invertible)."""
    require_odd_prime(p)
    return MatrixFp(p, _fermat_matrix(quadratic_form_grid(p, b, c, 1, size), p))


@dataclass(frozen=True)
class InvCount:
    p: int
    count: int


def inv_count(p: int) -> InvCount:
    """Inversions of ``i -> (i^-1 mod p)`` on ``1..p-1``."""
    require_odd_prime(p)
    inverses = np.array([pow(i, -1, p) for i in range(1, p)], dtype=np.int64)
    # count pairs i < j with inv[i] > inv[j]; Fenwick tree over values
    tree = [0] * p
    count = 0
    seen = 0
    for v in inverses.tolist():
        # number of earlier values greater than v
        s, i = 0, v
        while i > 0:
            s += tree[i]
            i -= i & -i
        count += seen - s
        i = v
        while i < p:
            tree[i] += 1
            i += i & -i
        seen += 1
    return InvCount(p, count)


def krattenthaler_det(
    poly_coeffs: Sequence[FpElement | int],
    X: Sequence[FpElement | int],
    Y: Sequence[FpElement | int],
    p: int,
) -> FpElement:
    """Closed form of ``det[P(X_i Y_j)]`` for ``deg P <= n-1``:
    ``a_0 ... a_{n-1} * prod_{i<j} (X_i - X_j)(Y_i - Y_j)``.
    """
    n = len(poly_coeffs)
    if len(X) != n or len(Y) != n:
        raise ValueError("P, X and Y must all have length n")
    a = [int(v) % p for v in poly_coeffs]
    xs = [int(v) % p for v in X]
    ys = [int(v) % p for v in Y]
    out = 1
    for v in a:
        out = out * v % p
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (xs[i] - xs[j]) * (ys[i] - ys[j]) % p
    return FpElement(out, p)


def poly_eval_matrix(
    poly_coeffs: Sequence[FpElement | int],
    X: Sequence[FpElement | int],
    Y: Sequence[FpElement | int],
    p: int,
) -> MatrixFp:
    """The matrix ``[P(X_i Y_j)]`` over F_p."""
    a = np.array([int(v) % p for v in poly_coeffs], dtype=np.int64)
    xs = np.array([int(v) % p for v in X], dtype=np.int64)
    ys = np.array([int(v) % p for v in Y], dtype=np.int64)
    t = xs[:, None] * ys[None, :] % p
    acc = np.zeros_like(t)
    for coeff in a[::-1]:  # Horner
        acc = (acc * t + coeff) % p
    return MatrixFp(p, acc)


def build_legendre_matrix(p: int, c: int, d: int, from_zero: bool = False) -> list[list[int]]:
    """Integer matrix of symbols ``((i^2 + cij + dj^2)/p)``.

    Indices run over ``1..p-1``, or ``0..p-1`` when ``from_zero`` is set.
    """
    require_odd_prime(p)
    grid = quadratic_form_grid(p, c, d, 0 if from_zero else 1, p - 1)
    table = [0] + [legendre(r, p) for r in range(1, p)]
    return [[table[v] for v in row] for row in grid.tolist()]


def legendre_det_mod_p(p: int, c: int, d: int, from_zero: bool = False) -> FpElement:
    return det_mod_p(MatrixFp.from_rows(build_legendre_matrix(p, c, d, from_zero), p))
