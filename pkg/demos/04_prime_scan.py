"""
Scanning a range of primes
==========================

Every claim has a checker that compares a prediction with a brute-force
computation and returns a record. A scan collects records over primes.
"""

from collections import Counter

from legendre_det import ClaimId
from legendre_det.cli import ScanConfig, run_scan
from legendre_det.detkit import inv_count
from legendre_det.modarith import odd_primes
from legendre_det.verify import verify_range

report = verify_range(odd_primes(5, 101), [ClaimId.D11_1MOD3, ClaimId.D22_1MOD4, ClaimId.INVERSION_PARITY])
for claim, counts in report.summary().items():
    print(claim, dict(counts))

# a grid claim runs once per (b, c)
grid = [(1, 1), (2, 2), (-3, 2)]
report = verify_range(odd_primes(5, 31), [ClaimId.SYMBOL_FORMULA], grid)
print(Counter(r.status.value for r in report.records))

# inversion counts of i -> 1/i mod p and their parity
print([(p, inv_count(p).count, inv_count(p).count % 2, (p + 1) // 2 % 2) for p in odd_primes(3, 40)])

# the same scan the command line runs, split over processes
config = ScanConfig(pmin=3, pmax=97, claims=tuple(ClaimId), bc_grid=None, workers=2)
report = run_scan(config)
print(len(report.records), "records,", len(report.failures), "failures")
for rec in report.failures:
    print(rec.claim.value, rec.p, "expected", rec.expected, "observed", rec.observed)
