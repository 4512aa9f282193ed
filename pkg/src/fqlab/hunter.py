"""High-throughput prime scans: the E_{p-3} = 0 (mod p) hunt and the
Wolstenholme-prime test.

The per-prime Euler residue is O(p); the hot inner loop (an alternating
sum of inverses mod p^2) is a compiled int64 kernel, which keeps the
default desk-scale ranges in seconds.  All products stay below 2^63
because residues mod p are lifted to mod p^2 via the exact decomposition
1/k = i - i*c*p with c = (k*i - 1)/p, so no 128-bit arithmetic is needed.
"""

from __future__ import annotations

import math
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from fqlab.modring import is_prime
from fqlab.quotients import euler_from_half_alt_sum

SIEVE_LIMIT = 2**31
_SEGMENT = 1 << 20
_BLOCK_PRIMES = 1000


class RangeTooLarge(ValueError):
    """Sieve range beyond the supported 2^31 bound."""


class CheckpointCorrupt(ValueError):
    """Checkpoint file unreadable or inconsistent with the requested range."""


def sieve_primes(lo: int, hi: int) -> list[int]:
    """Ascending primes in [lo, hi] by a segmented sieve of Eratosthenes."""
    if hi > SIEVE_LIMIT:
        raise RangeTooLarge(f"hi = {hi} exceeds {SIEVE_LIMIT}")
    lo = max(lo, 2)
    if lo > hi:
        return []
    root = math.isqrt(hi)
    base_mask = np.ones(root + 1, dtype=bool)
    base_mask[:2] = False
    for q in range(2, math.isqrt(root) + 1):
        if base_mask[q]:
            base_mask[q * q :: q] = False
    base = np.flatnonzero(base_mask)
    out: list[int] = []
    for seg_lo in range(lo, hi + 1, _SEGMENT):
        seg_hi = min(seg_lo + _SEGMENT - 1, hi)
        mask = np.ones(seg_hi - seg_lo + 1, dtype=bool)
        for q in base:
            q = int(q)
            start = max(q * q, (seg_lo + q - 1) // q * q)
            if start <= seg_hi:
                mask[start - seg_lo :: q] = False
        if seg_lo <= 1:
            mask[: 2 - seg_lo] = False
        out.extend((np.flatnonzero(mask) + seg_lo).tolist())
    return out


@njit(cache=True)
def _half_alt_sum_mod_p2(p: int) -> int:
    # sum_{k=1..(p-1)/2} (-1)^(k-1)/k mod p^2, int64 only.
    m = (p - 1) // 2
    inv = np.empty(m + 1, np.int64)
    if m >= 1:
        inv[1] = 1
    a = 0  # signed sum of mod-p inverses, |a| < p*m
    b = 0  # signed sum of i*c mod p, |b| < p*m
    for k in range(1, m + 1):
        if k > 1:
            q = p // k
            inv[k] = (p - q * inv[p - q * k] % p) % p
        i = inv[k]
        c = (k * i - 1) // p
        t = i * (c % p) % p
        if k % 2 == 1:
            a += i
            b += t
        else:
            a -= i
            b -= t
    return (a - b % p * p) % (p * p)


def euler_residue(p: int) -> int:
    """E_{p-3} mod p via the compiled kernel; equals quotients.euler_p3_mod."""
    s = int(_half_alt_sum_mod_p2(p))
    q = (pow(2, p - 1, p**3) - 1) // p % (p * p)
    return euler_from_half_alt_sum(p, s, q)


@dataclass(frozen=True)
class HuntRecord:
    p: int
    e_p3_residue: int
    is_hit: bool


@dataclass
class ScanStats:
    """Residue-to-p ratio statistics over the scanned primes (informational:
    they support, but do not assert, the uniform-remainder assumption)."""

    scanned: int = 0
    min_ratio: float = math.inf
    max_ratio: float = -math.inf
    _ratio_sum: float = 0.0

    @property
    def mean_ratio(self) -> float:
        return self._ratio_sum / self.scanned if self.scanned else math.nan

    def absorb(self, count: int, ratio_sum: float, mn: float, mx: float) -> None:
        self.scanned += count
        self._ratio_sum += ratio_sum
        self.min_ratio = min(self.min_ratio, mn)
        self.max_ratio = max(self.max_ratio, mx)


@dataclass
class HuntResult:
    lo: int
    hi: int
    hits: list[HuntRecord] = field(default_factory=list)
    stats: ScanStats = field(default_factory=ScanStats)
    last_completed: int = 0
    complete: bool = True

    @property
    def hit_primes(self) -> list[int]:
        return [r.p for r in self.hits]


@dataclass(frozen=True)
class HuntCheckpoint:
    range_lo: int
    range_hi: int
    last_completed: int
    hits: tuple[int, ...]


def _write_checkpoint(path: str, cp: HuntCheckpoint) -> None:
    # Plain text, rewritten atomically via temp-file rename.
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(os.path.abspath(path)))
    with os.fdopen(fd, "w") as fh:
        fh.write(f"{cp.range_lo} {cp.range_hi} {cp.last_completed}\n")
        for p in cp.hits:
            fh.write(f"hit {p}\n")
    os.replace(tmp, path)


def read_checkpoint(path: str) -> HuntCheckpoint:
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
        lo, hi, last = (int(x) for x in lines[0].split())
        hits = []
        for line in lines[1:]:
            tag, p = line.split()
            if tag != "hit":
                raise ValueError(f"bad line: {line!r}")
            hits.append(int(p))
    except (OSError, ValueError, IndexError) as exc:
        raise CheckpointCorrupt(f"{path}: {exc}") from exc
    if not lo <= last <= hi or sorted(hits) != hits or any(p > last for p in hits):
        raise CheckpointCorrupt(f"{path}: inconsistent checkpoint")
    return HuntCheckpoint(lo, hi, last, tuple(hits))


def _scan_block(primes: list[int]) -> tuple[list[tuple[int, int]], int, float, float, float]:
    """Worker: scan one contiguous block; returns hits and partial stats."""
    hits = []
    ratio_sum = 0.0
    mn = math.inf
    mx = -math.inf
    for p in primes:
        r = euler_residue(p)
        if r == 0:
            hits.append((p, r))
        ratio = r / p
        ratio_sum += ratio
        mn = min(mn, ratio)
        mx = max(mx, ratio)
    return hits, len(primes), ratio_sum, mn, mx


def hunt_euler(
    lo: int,
    hi: int,
    workers: int = 1,
    checkpoint: str | None = None,
    resume: bool = False,
    block_size: int = _BLOCK_PRIMES,
    max_primes: int | None = None,
    progress: bool = False,
) -> HuntResult:
    """Scan every prime in [lo, hi] for E_{p-3} = 0 (mod p).

    Work is sharded into contiguous prime blocks merged in ascending
    order, so the hit list and statistics are identical for any worker
    count.  A checkpoint, when given, is rewritten atomically after each
    completed block; `max_primes` stops the scan early at a block
    boundary (the checkpoint then allows resumption).
    """
    if lo < 5:
        raise ValueError("lower bound must be at least 5")
    result = HuntResult(lo=lo, hi=hi, last_completed=lo - 1)
    primes = sieve_primes(lo, hi)
    if resume:
        if checkpoint is None:
            raise ValueError("resume requires a checkpoint path")
        cp = read_checkpoint(checkpoint)
        if (cp.range_lo, cp.range_hi) != (lo, hi):
            raise CheckpointCorrupt(
                f"checkpoint range [{cp.range_lo}, {cp.range_hi}] does not "
                f"match requested [{lo}, {hi}]"
            )
        result.hits = [HuntRecord(p, 0, True) for p in cp.hits]
        result.last_completed = cp.last_completed
        primes = [p for p in primes if p > cp.last_completed]
    if max_primes is not None:
        primes = primes[:max_primes]
        result.complete = len(primes) == len(sieve_primes(result.last_completed + 1, hi))
    blocks = [primes[i : i + block_size] for i in range(0, len(primes), block_size)]
    done = 0

    def consume(block: list[int], outcome) -> None:
        nonlocal done
        hits, count, ratio_sum, mn, mx = outcome
        result.hits.extend(HuntRecord(p, r, True) for p, r in hits)
        result.stats.absorb(count, ratio_sum, mn, mx)
        result.last_completed = block[-1]
        done += 1
        if progress:
            print(
                f"scanned through {result.last_completed} "
                f"({done}/{len(blocks)} blocks, {len(result.hits)} hits)",
                file=sys.stderr,
            )
        if checkpoint is not None:
            _write_checkpoint(
                checkpoint,
                HuntCheckpoint(
                    lo, hi, result.last_completed, tuple(result.hit_primes)
                ),
            )

    if workers <= 1:
        for block in blocks:
            consume(block, _scan_block(block))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for block, outcome in zip(blocks, pool.map(_scan_block, blocks)):
                consume(block, outcome)
    return result


def central_binom_mod(p: int, e: int = 4) -> int:
    """C(2p-1, p-1) mod p^e as the product of (p+k)/k over k = 1..p-1.

    Batch inversion: mod-p inverses from the standard recurrence, lifted
    to p^e by Newton steps.  Raw integers; this loop runs over every
    prime up to 20000 in the acceptance sweep.
    """
    m = p**e
    lifts = 0 if e == 1 else (1 if e == 2 else 2)
    inv = [0] * p
    if p > 1:
        inv[1] = 1
    prod = 1 % m
    for k in range(1, p):
        if k > 1:
            q = p // k
            inv[k] = (p - q * inv[p - q * k] % p) % p
        x = inv[k]
        for _ in range(lifts):
            x = x * (2 - k * x) % m
        prod = prod * ((p + k) * x) % m
    return prod


def wolstenholme_test(p: int) -> bool:
    """True when C(2p-1, p-1) = 1 (mod p^4): the Wolstenholme-prime test."""
    if p < 5 or not is_prime(p):
        raise ValueError(f"{p} is not a prime >= 5")
    return central_binom_mod(p, 4) == 1
