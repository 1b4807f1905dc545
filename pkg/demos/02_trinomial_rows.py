"""
Generalized trinomial coefficients mod p
========================================

<n,k> is the coefficient of x^k in (x + b + c/x)^n. Rows are built by the
three-term recurrence and stored as residues on the window -n..n.
"""

from legendre_det import row_p_minus_1_direct, row_p_minus_1_lucas, trinomial_row
from legendre_det.modarith import legendre
from legendre_det.trinomial import (
    central_trinomial_mod_p2,
    expand_power_p_minus_2,
    fold_mod_xp_minus_x,
    regrouped_expansion,
    next_row,
)

# (x + 1 + 1/x)^3 over F_101: 1 3 6 7 6 3 1
print(trinomial_row(3, 1, 1, 101).tolist())

# b = 2, c = 1 gives binomial coefficients C(2n, n+k)
print(trinomial_row(4, 2, 1, 101).tolist())

# row p-1 for (1, 1) read backwards is the symbol (k/3)
p = 13
row = row_p_minus_1_direct(1, 1, p)
print([row[p - k] for k in range(p + 1)])
print([legendre(k, 3) % p for k in range(p + 1)])

# one more step and everything between the ends collapses to 0
print(next_row(row).tolist())

# the same row, filled from Lucas values u_k(-b, c) in O(p)
print(row_p_minus_1_lucas(3, 5, 31) == row_p_minus_1_direct(3, 5, 31))

# (x^2 + bx + c)^(p-2) reduced modulo x^p - x, two ways
b, c, p = 2, 3, 11
print(fold_mod_xp_minus_x(expand_power_p_minus_2(b, c, p), p))
print(regrouped_expansion(b, c, p))

# central trinomial coefficients mod p^2
for p in (5, 7, 11, 13):
    print(p, central_trinomial_mod_p2(p).value, legendre(p, 3) * pow(3, p - 1, p * p) % (p * p))
