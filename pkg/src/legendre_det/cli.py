"""Command-line entry point: ``compute``, ``verify`` and ``primes``.

Exit codes: 0 all pass, 1 a counterexample was found, 2 usage or config error.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence, TextIO

from .detkit import dp_det_mod_p
from .modarith import is_odd_prime, legendre, primes_in_range
from .verify import ClaimId, VerificationRecord, VerificationReport, records_for_prime

PRIME_BOUND = 10**6
FIELDS = ("claim", "p", "b", "c", "expected", "observed", "status", "elapsed_ms")
FORMATS = ("json-lines", "csv", "human")
WORKERS_ENV = "LEGENDRE_DET_WORKERS"


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class ScanConfig:
    pmin: int
    pmax: int
    claims: tuple[ClaimId, ...]
    bc_grid: tuple[tuple[int, int], ...] | None  # None selects each claim's default grid
    workers: int = 1
    output_format: str = "human"

    def __post_init__(self):
        if not 3 <= self.pmin <= self.pmax:
            raise ConfigError(f"need 3 <= pmin <= pmax, got pmin={self.pmin}, pmax={self.pmax}")
        if self.pmax > PRIME_BOUND:
            raise ConfigError(f"pmax must not exceed {PRIME_BOUND}")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.output_format not in FORMATS:
            raise ConfigError(f"unknown format {self.output_format!r}")


def parse_claims(text: str) -> tuple[ClaimId, ...]:
    if text.strip().lower() == "all":
        return tuple(ClaimId)
    try:
        return tuple(ClaimId.parse(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def parse_grid(text: str) -> tuple[tuple[int, int], ...] | None:
    """``default`` or pairs like ``"1,1;2,2;-1,3"``."""
    if text.strip().lower() == "default":
        return None
    pairs = []
    try:
        for chunk in text.split(";"):
            if chunk.strip():
                b, c = chunk.split(",")
                pairs.append((int(b), int(c)))
    except ValueError:
        raise ConfigError(f"bad --bc-grid {text!r}; expected 'default' or 'b,c;b,c;...'") from None
    if not pairs:
        raise ConfigError("--bc-grid is empty")
    return tuple(pairs)


def resolve_workers(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
    return 1


def _scan_prime(args) -> list[VerificationRecord]:
    p, claims, grid = args
    return records_for_prime(p, claims, grid)


def run_scan(config: ScanConfig) -> VerificationReport:
    """Fan out over primes; each prime is handled by one worker."""
    primes = [q for q in primes_in_range(config.pmin, config.pmax) if q != 2]
    tasks = [(q, config.claims, config.bc_grid) for q in primes]
    report = VerificationReport()
    if config.workers == 1:
        for t in tasks:
            report.extend(_scan_prime(t))
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for recs in pool.map(_scan_prime, tasks):
                report.extend(recs)
    return report


def _row(rec: VerificationRecord) -> dict:
    d = rec.to_dict()
    d["elapsed_ms"] = round(d["elapsed_ms"], 3)
    return d


def write_report(report: VerificationReport, fmt: str, out: TextIO) -> None:
    if fmt == "json-lines":
        for rec in report.records:
            out.write(json.dumps(_row(rec)) + "\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=FIELDS, lineterminator="\n")
        writer.writeheader()
        for rec in report.records:
            writer.writerow(_row(rec))
    else:
        for rec in report.records:
            if rec.status.value == "na":
                continue
            params = "" if rec.b is None else f" b={rec.b} c={rec.c}"
            exp, obs = _clip(rec.expected), _clip(rec.observed)
            out.write(f"{rec.status.value.upper():4} {rec.claim.value} p={rec.p}{params} expected={exp} observed={obs}\n")


def _clip(s: str, width: int = 60) -> str:
    return s if len(s) <= width else s[: width - 3] + "..."


def write_summary(report: VerificationReport, out: TextIO) -> None:
    for claim, counts in report.summary().items():
        out.write(
            f"summary {claim}: pass={counts.get('pass', 0)} fail={counts.get('fail', 0)} na={counts.get('na', 0)}\n"
        )
    notes = Counter((r.claim.value, r.note) for r in report.flagged if r.status.value != "na")
    for (claim, note), n in sorted(notes.items()):
        out.write(f"note {claim}: {note} ({n} records)\n")


def cmd_compute(args, out: TextIO, err: TextIO) -> int:
    p = args.p
    if not is_odd_prime(p):
        err.write(f"error: {p} is not a prime (odd prime required)\n")
        return 2
    if p > PRIME_BOUND:
        err.write(f"error: p must not exceed {PRIME_BOUND}\n")
        return 2
    start = time.perf_counter()
    det = dp_det_mod_p(p, args.b, args.c).value
    elapsed = (time.perf_counter() - start) * 1000.0
    out.write(f"p={p} b={args.b} c={args.c} det_mod_p={det} symbol={legendre(det, p)} elapsed_ms={elapsed:.3f}\n")
    return 0


def cmd_verify(args, out: TextIO, err: TextIO) -> int:
    try:
        config = ScanConfig(
            pmin=args.pmin,
            pmax=args.pmax,
            claims=parse_claims(args.claims),
            bc_grid=parse_grid(args.bc_grid),
            workers=resolve_workers(args.workers),
            output_format=args.format,
        )
    except ConfigError as exc:
        err.write(f"error: {exc}\n")
        return 2
    report = run_scan(config)
    write_report(report, config.output_format, out)
    # keep machine-readable streams clean
    write_summary(report, out if config.output_format == "human" else err)
    return 0 if report.ok else 1


def cmd_primes(args, out: TextIO, err: TextIO) -> int:
    if args.pmax > PRIME_BOUND:
        err.write(f"error: pmax must not exceed {PRIME_BOUND}\n")
        return 2
    for q in primes_in_range(args.pmin, args.pmax):
        out.write(f"{q}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="legendre-det", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="D_p(b,c) mod p and its Legendre symbol")
    pc.add_argument("-p", type=int, required=True)
    pc.add_argument("-b", type=int, default=1)
    pc.add_argument("-c", type=int, default=1)
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="scan a prime range and check claims")
    pv.add_argument("--claims", default="all", help="comma-separated claim ids or 'all'")
    pv.add_argument("--pmin", type=int, default=3)
    pv.add_argument("--pmax", type=int, default=97)
    pv.add_argument("--bc-grid", default="default", help="'default' or 'b,c;b,c;...'")
    pv.add_argument("--workers", type=int, default=None, help=f"process count (fallback: ${WORKERS_ENV})")
    pv.add_argument("--format", choices=FORMATS, default="human")
    pv.set_defaults(func=cmd_verify)

    pp = sub.add_parser("primes", help="list primes in [pmin, pmax]")
    pp.add_argument("pmin", type=int)
    pp.add_argument("pmax", type=int)
    pp.set_defaults(func=cmd_primes)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
