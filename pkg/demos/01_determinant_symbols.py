"""
Legendre symbols of D_p(b, c)
=============================

D_p(b, c) is the determinant of the (p-1) x (p-1) matrix with entries
(i^2 + b*i*j + c*j^2)^(p-2) mod p. The entries are inverses of the
quadratic form values (or 0 where the form vanishes). For c = 1 the matrix
is symmetric. The symbol of its determinant depends only on p modulo a
small number for the two parameter pairs below.
"""

import numpy as np

from legendre_det import build_dp_matrix, compute_dp_symbol, det_mod_p
from legendre_det.modarith import odd_primes

# the matrix for a small prime
m = build_dp_matrix(7, 1, 1)
print(m.entries)
print("det mod 7 =", det_mod_p(m).value)

# (b, c) = (1, 1): symbol against p mod 9 for p = 1 mod 3
for p in odd_primes(7, 200):
    if p % 3 == 1:
        print(f"p={p:4d}  p mod 9 = {p % 9}  symbol = {compute_dp_symbol(p, 1, 1):+d}")

# (b, c) = (2, 2): zero unless p = 1 mod 8
table = np.array([(p, p % 8, compute_dp_symbol(p, 2, 2)) for p in odd_primes(5, 120)])
print(table[table[:, 1] == 1])
print("nonzero outside 1 mod 8:", table[(table[:, 1] != 1) & (table[:, 2] != 0)].size)
