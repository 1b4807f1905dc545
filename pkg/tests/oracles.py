"""Independent brute-force oracles used by the tests.

Nothing here imports the package under test.
"""
from collections import defaultdict
from fractions import Fraction
from itertools import permutations


def laurent_power(n, b, c):
    """Exact integer coefficients {k: <n,k>} of (x + b + c/x)^n by repeated multiplication."""
    poly = {0: 1}
    for _ in range(n):
        nxt = defaultdict(int)
        for k, v in poly.items():
            nxt[k + 1] += v
            nxt[k] += b * v
            nxt[k - 1] += c * v
        poly = dict(nxt)
    return poly


def poly_mul(f, g, p=None):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return [v % p for v in out] if p else out


def poly_pow(f, e, p=None):
    """Polynomial power by repeated squaring (coefficient lists, low degree first)."""
    result = [1]
    base = list(f)
    while e:
        if e & 1:
            result = poly_mul(result, base, p)
        base = poly_mul(base, base, p)
        e >>= 1
    return result


def det_fraction(rows):
    """Exact determinant over Q by Gaussian elimination with Fractions."""
    a = [[Fraction(v) for v in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    assert det.denominator == 1
    return int(det)


def det_cofactor(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * det_cofactor(minor)
    return total


def det_leibniz(rows):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inv
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def squares_mod(p):
    return {x * x % p for x in range(1, p)}


def legendre_by_squares(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if a in squares_mod(p) else -1


def inversions_brute(p):
    inv = [next(y for y in range(1, p) if x * y % p == 1) for x in range(1, p)]
    return sum(1 for i in range(len(inv)) for j in range(i + 1, len(inv)) if inv[i] > inv[j])


def lucas_list(n, A, B):
    u = [0, 1]
    while len(u) <= n:
        u.append(A * u[-1] - B * u[-2])
    return u[: n + 1]


def is_prime_brute(n):
    return n >= 2 and all(n % d for d in range(2, n))
