"""Lucas sequences u_n(A, B): u_0 = 0, u_1 = 1, u_{n+1} = A u_n - B u_{n-1}."""
from __future__ import annotations

from dataclasses import dataclass

from .exceptions import BoundExceeded
from .modarith import FpElement, legendre

EXACT_BOUND = 10_000


@dataclass(frozen=True)
class LucasSpec:
    A: int
    B: int

    @property
    def discriminant(self) -> int:
        return self.A * self.A - 4 * self.B


def lucas_sequence_mod(n: int, spec: LucasSpec, p: int) -> list[int]:
    """Residues ``[u_0, ..., u_n]`` mod ``p``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = spec.A % p, spec.B % p
    seq = [0, 1 % p]
    for _ in range(n - 1):
        seq.append((a * seq[-1] - b * seq[-2]) % p)
    return seq[: n + 1]


def lucas_u_mod(n: int, spec: LucasSpec, p: int) -> FpElement:
    return FpElement(lucas_sequence_mod(n, spec, p)[n], p)


def lucas_u_exact(n: int, spec: LucasSpec) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > EXACT_BOUND:
        raise BoundExceeded(f"n={n} exceeds the exact-evaluation bound {EXACT_BOUND}")
    prev, cur = 0, 1
    if n == 0:
        return 0
    for _ in range(n - 1):
        prev, cur = cur, spec.A * cur - spec.B * prev
    return cur


_NEG2_2_TABLE = (0, 1, -2, 2)


def closed_form_u_neg2_2(k: int) -> int:
    """u_k(-2, 2) = (-4)^floor(k/4) * (0, 1, -2, 2)[k mod 4]."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (-4) ** (k // 4) * _NEG2_2_TABLE[k % 4]


def check_lemma41(spec: LucasSpec, p: int) -> tuple[bool, bool | None]:
    """Check u_p = (D/p) and u_{p-(D/p)} = 0 mod p, where D = A^2 - 4B.

    The second check is only meaningful when p does not divide B; it is
    reported as ``None`` otherwise.
    """
    sym = legendre(spec.discriminant, p)
    seq = lucas_sequence_mod(p + 1, spec, p)
    first = seq[p] == sym % p
    if spec.B % p == 0:
        return first, None
    return first, seq[p - sym] == 0
