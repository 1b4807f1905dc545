"""
Lucas sequences and the grouped coefficients U(k)
=================================================

u_0 = 0, u_1 = 1, u_{n+1} = A u_n - B u_{n-1}. For (A, B) = (-2, 2) the
sequence has period 4 up to powers of -4, and it drives the values of
U(k) = <p-2,k> + 2^(p-1-k) <p-2,p-1-k> for (b, c) = (2, 2).
"""

import numpy as np

from legendre_det import LucasSpec, closed_form_u_neg2_2, lucas_u_exact, u_function
from legendre_det.lucas import lucas_sequence_mod
from legendre_det.modarith import legendre, odd_primes

spec = LucasSpec(-2, 2)
print([lucas_u_exact(n, spec) for n in range(13)])
print([closed_form_u_neg2_2(n) for n in range(13)])

# u_p = (D/p) and u_{p - (D/p)} = 0 mod p, with D = A^2 - 4B
fib = LucasSpec(1, -1)
for p in odd_primes(7, 60):
    seq = lucas_sequence_mod(p + 1, fib, p)
    sym = legendre(fib.discriminant, p)
    print(p, sym, seq[p] == sym % p, seq[p - sym] == 0)

# U(k) for (2, 2): never zero when p = 1 mod 8, U((p-1)/2) = 0 when p = 5 mod 8
for p in (13, 17, 29, 41):
    U = u_function(p, 2, 2)
    print(p, p % 8, U.values.tolist(), "zeros:", int(np.sum(U.values == 0)))

# 4U(p-2) is 8, not 2, for p = 1 mod 8
print([(p, 4 * u_function(p, 2, 2)[p - 2] % p) for p in odd_primes(5, 200) if p % 8 == 1])
