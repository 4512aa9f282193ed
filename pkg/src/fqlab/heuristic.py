"""Expected-count heuristic for hit primes in an interval.

The expected number of primes p in [x, y] with a given residue condition
holding "at random" is sum of 1/p over primes in [x, y], approximated by
log(log y / log x) with natural logarithms (the base that reproduces the
reference figures 1.0221 and 3.06882).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from fqlab.hunter import sieve_primes

SIEVE_FEASIBLE = 10**8


class InvalidInterval(ValueError):
    """Interval endpoints must satisfy 2 <= x <= y."""


class RangeTooLarge(ValueError):
    """Exact reciprocal sum requested beyond the sieve-feasible bound."""


@dataclass(frozen=True)
class DensityEstimate:
    x: float
    y: float
    formula_value: float
    exact_sum: float | None = None


def expected_count(x: float, y: float) -> DensityEstimate:
    """ln(ln y / ln x): expected hits among primes in [x, y]."""
    if not 2 <= x <= y:
        raise InvalidInterval(f"need 2 <= x <= y, got [{x}, {y}]")
    return DensityEstimate(x, y, math.log(math.log(y) / math.log(x)))


def prime_reciprocal_sum(x: int, y: int) -> float:
    """Exact sum of 1/p over primes in [x, y], accumulated ascending."""
    if y > SIEVE_FEASIBLE:
        raise RangeTooLarge(f"y = {y} exceeds sieve-feasible {SIEVE_FEASIBLE}")
    if x > y:
        raise InvalidInterval(f"need x <= y, got [{x}, {y}]")
    total = 0.0
    for p in sieve_primes(max(x, 2), y):
        total += 1.0 / p
    return total


def density_estimate(x: float, y: float) -> DensityEstimate:
    """The formula value plus the exact reciprocal sum when feasible."""
    est = expected_count(x, y)
    if y <= SIEVE_FEASIBLE and float(y) == int(y) and float(x) == int(x):
        exact = prime_reciprocal_sum(int(x), int(y))
        return DensityEstimate(est.x, est.y, est.formula_value, exact)
    return est
