"""Harmonic-type sums, exact and modulo prime powers.

Every modular sum here is a single O(n) pass fed by one batch inversion;
the O(n^2) brute-force counterparts live only in the test suite.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from fqlab.modring import (
    PrimePowerModulus,
    Rational,
    Residue,
    _batch_inv_raw,
    _inv_int,
)

EXACT_BOUND = 10**4


class BoundExceeded(ValueError):
    """Exact-rational evaluation requested beyond the supported bound."""


class Parity(enum.Enum):
    ANY = "any"
    ODD = "odd"
    EVEN = "even"

    def accepts(self, k: int) -> bool:
        if self is Parity.ANY:
            return True
        return k % 2 == (1 if self is Parity.ODD else 0)


class ParitySelector:
    """Parity restriction on the indices of a double sum over i < j."""

    __slots__ = ("i_parity", "j_parity")

    def __init__(self, i_parity: Parity = Parity.ANY, j_parity: Parity = Parity.ANY):
        self.i_parity = i_parity
        self.j_parity = j_parity

    def __repr__(self) -> str:
        return f"ParitySelector({self.i_parity.value}/{self.j_parity.value})"


class SignedSeriesKind(enum.Enum):
    """Shapes of the alternating series sum_{k=1..n} (-1)^k * term(k)."""

    H_K = "H_k"
    H_PREV_OVER_K = "H_{k-1}/k"
    H_K_SQUARED = "H_k^2"
    INV_K_SQUARED = "1/k^2"


class Direction(enum.Enum):
    INVERSE_WEIGHTS = "inverse"  # sum of 1/(k * 2^k)
    FORWARD_WEIGHTS = "forward"  # sum of 2^k / k


def harmonic_exact(n: int) -> Rational:
    """H_n = 1 + 1/2 + ... + 1/n as a reduced fraction, with H_0 = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > EXACT_BOUND:
        raise BoundExceeded(f"n = {n} exceeds exact bound {EXACT_BOUND}")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k)
    return total


def harmonic_mod(n: int, mod: PrimePowerModulus) -> Residue:
    """H_n mod p^e; requires n < p."""
    inv = _batch_inv_raw(n, mod.p, mod.e, mod.m)
    return Residue(sum(inv[1:]) % mod.m, mod)


def parity_harmonic_mod(n: int, mod: PrimePowerModulus, parity: Parity) -> Residue:
    """Sum of 1/k over k <= n restricted to one parity class."""
    inv = _batch_inv_raw(n, mod.p, mod.e, mod.m)
    start = 1 if parity is not Parity.EVEN else 2
    step = 1 if parity is Parity.ANY else 2
    return Residue(sum(inv[start :: step][: n]) % mod.m, mod)


def alt_harmonic_mod(n: int, mod: PrimePowerModulus) -> Residue:
    """sum_{k=1..n} (-1)^(k-1) / k mod p^e."""
    inv = _batch_inv_raw(n, mod.p, mod.e, mod.m)
    total = 0
    for k in range(1, n + 1):
        total += inv[k] if k % 2 else -inv[k]
    return Residue(total, mod)


def geometric_harmonic_sum(
    n: int, mod: PrimePowerModulus, direction: Direction
) -> Residue:
    """sum of 1/(k*2^k) (inverse weights) or 2^k/k (forward weights)."""
    inv = _batch_inv_raw(n, mod.p, mod.e, mod.m)
    m = mod.m
    w = _inv_int(2, m) if direction is Direction.INVERSE_WEIGHTS else 2
    wk = 1
    total = 0
    for k in range(1, n + 1):
        wk = wk * w % m
        total = (total + wk * inv[k]) % m
    return Residue(total, mod)


def inv_square_sum_mod(n: int, mod: PrimePowerModulus) -> Residue:
    """sum_{k=1..n} 1/k^2 mod p^e."""
    inv = _batch_inv_raw(n, mod.p, mod.e, mod.m)
    m = mod.m
    total = 0
    for k in range(1, n + 1):
        total = (total + inv[k] * inv[k]) % m
    return Residue(total, mod)


def double_sum_mod(
    n: int, mod: PrimePowerModulus, sel: ParitySelector | None = None
) -> Residue:
    """sum over 1 <= i < j <= n of 1/(i*j), parities restricted per sel.

    One sweep over j with parity-filtered prefix sums of inverses; O(n).
    """
    sel = sel or ParitySelector()
    inv = _batch_inv_raw(n, mod.p, mod.e, mod.m)
    m = mod.m
    prefix = 0  # sum of 1/i over i < j with i of the selected parity
    total = 0
    for j in range(1, n + 1):
        if sel.j_parity.accepts(j):
            total = (total + inv[j] * prefix) % m
        if sel.i_parity.accepts(j):
            prefix = (prefix + inv[j]) % m
    return Residue(total, mod)


def signed_series_mod(
    n: int, mod: PrimePowerModulus, kind: SignedSeriesKind
) -> Residue:
    """sum_{k=1..n} (-1)^k * term(k) mod p^e, single pass with running H_k."""
    inv = _batch_inv_raw(n, mod.p, mod.e, mod.m)
    m = mod.m
    h = 0  # H_{k-1} entering iteration k
    total = 0
    for k in range(1, n + 1):
        if kind is SignedSeriesKind.H_K:
            term = h + inv[k]
        elif kind is SignedSeriesKind.H_PREV_OVER_K:
            term = h * inv[k]
        elif kind is SignedSeriesKind.H_K_SQUARED:
            hk = (h + inv[k]) % m
            term = hk * hk
        else:
            term = inv[k] * inv[k]
        total = (total - term if k % 2 else total + term) % m
        h = (h + inv[k]) % m
    return Residue(total, mod)


def binom_harmonic_sum(
    n: int, mod: PrimePowerModulus | None = None
) -> Rational | Residue:
    """sum_{k=1..n} C(n,k) * H_k, exact or mod p^e.

    The modular form (used at n = p - 1) keeps a running binomial
    C(n,k) = C(n,k-1) * (n-k+1)/k alongside the running H_k; all factors
    stay p-free because n < p.
    """
    if mod is None:
        if n > EXACT_BOUND:
            raise BoundExceeded(f"n = {n} exceeds exact bound {EXACT_BOUND}")
        total = Fraction(0)
        h = Fraction(0)
        for k in range(1, n + 1):
            h += Fraction(1, k)
            total += math.comb(n, k) * h
        return total
    inv = _batch_inv_raw(n, mod.p, mod.e, mod.m)
    m = mod.m
    binom = 1
    h = 0
    total = 0
    for k in range(1, n + 1):
        binom = binom * ((n - k + 1) % m) % m * inv[k] % m
        h = (h + inv[k]) % m
        total = (total + binom * h) % m
    return Residue(total, mod)
