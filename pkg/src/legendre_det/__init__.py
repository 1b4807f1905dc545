"""Determinants of (i^2 + bij + cj^2)^(p-2) over F_p and the objects behind them.

Modules:

* :mod:`.modarith` residues mod p and p^2, Legendre symbols, primes
* :mod:`.trinomial` generalized trinomial coefficients ``<n,k>_{b,c}``
* :mod:`.lucas` Lucas sequences ``u_n(A,B)``
* :mod:`.detkit` matrices over F_p, determinants, inversion counts
* :mod:`.verify` claim checkers and verification reports
* :mod:`.cli` the ``legendre-det`` command
"""
from .detkit import (
    InvCount,
    MatrixFp,
    build_dp_matrix,
    build_legendre_matrix,
    compute_dp_symbol,
    det_exact,
    det_mod_p,
    inv_count,
    krattenthaler_det,
)
from .lucas import LucasSpec, check_lemma41, closed_form_u_neg2_2, lucas_u_exact, lucas_u_mod
from .modarith import Fp2Element, FpElement, PrimeField, fermat_entry, legendre, mod_pow
from .trinomial import (
    TrinomialRow,
    central_trinomial_mod_p2,
    corollary21_coeffs,
    expand_power_p_minus_2,
    lemma21_rhs,
    row_p_minus_1_direct,
    row_p_minus_1_lucas,
    row_p_minus_2_direct,
    trinomial_row,
)
from .verify import ClaimId, Status, VerificationRecord, VerificationReport, predict_d11, predict_d22, u_function

__version__ = "0.1.0"
