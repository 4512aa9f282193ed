"""Fermat quotients mod p^e and Euler numbers by two independent routes."""

from __future__ import annotations

import threading
from dataclasses import dataclass

from fqlab.modring import PrimePowerModulus, Residue, is_prime
from fqlab.sums import alt_harmonic_mod

EULER_BOUND = 2000


class BaseDivisibleByP(ValueError):
    """Fermat quotient q_p(a) is undefined when p divides a."""


class BoundExceeded(ValueError):
    """Euler-number index beyond the configured table bound."""


class DivisibilityAssertionFailed(ArithmeticError):
    """A guaranteed divisibility failed: implementation bug, not bad input."""


@dataclass(frozen=True)
class EulerNumber:
    index: int
    value: int


@dataclass(frozen=True)
class FermatQuotientResult:
    p: int
    base: int
    e: int
    residue: Residue


def fermat_quotient(p: int, a: int, e: int = 1) -> FermatQuotientResult:
    """q_p(a) = (a^(p-1) - 1)/p, reduced mod p^e (e <= 3).

    a^(p-1) is taken mod p^(e+1); the subtraction leaves a multiple of p
    by Fermat's little theorem, and the division by p is exact.
    """
    if not 1 <= e <= 3:
        raise ValueError("exponent must be in 1..3")
    if a % p == 0:
        raise BaseDivisibleByP(f"p = {p} divides base {a}")
    t = pow(a, p - 1, p ** (e + 1)) - 1
    if t % p:
        raise DivisibilityAssertionFailed("Fermat little theorem violated")
    mod = PrimePowerModulus(p, e)
    return FermatQuotientResult(p, a, e, Residue(t // p, mod))


# Memoized even-index Euler numbers; odd indices are identically zero.
# Single writer, many readers.
_euler_lock = threading.Lock()
_euler_even: list[int] = [1]  # _euler_even[j] = E_{2j}


def _extend_euler_table(upto_even: int) -> None:
    # E_n = -sum_{k=2,4,..,n} C(n,k) * E_{n-k}, the standard convention
    # forced by E_0 = 1 and vanishing odd-index values.
    while len(_euler_even) <= upto_even // 2:
        n = 2 * len(_euler_even)
        binom = 1  # C(n, k), updated incrementally over even k
        acc = 0
        for k in range(2, n + 1, 2):
            binom = binom * (n - k + 2) * (n - k + 1) // ((k - 1) * k)
            acc += binom * _euler_even[(n - k) // 2]
        _euler_even.append(-acc)


def euler_exact(n: int) -> EulerNumber:
    """E_n by the exact big-integer recurrence; memoized."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n > EULER_BOUND:
        raise BoundExceeded(f"index {n} exceeds bound {EULER_BOUND}")
    if n % 2 == 1:
        return EulerNumber(n, 0)
    with _euler_lock:
        _extend_euler_table(n)
        return EulerNumber(n, _euler_even[n // 2])


def euler_sign(p: int) -> int:
    """(-1)^((p+1)/2): -1 exactly when p = 1 (mod 4)."""
    return -1 if p % 4 == 1 else 1


def euler_from_half_alt_sum(p: int, half_alt_sum: int, quotient: int) -> int:
    """E_{p-3} mod p extracted from sum_{k<=(p-1)/2} (-1)^(k-1)/k mod p^2.

    The alternating half sum equals q - (p/2) q^2 - (-1)^((p+1)/2) p E_{p-3}
    mod p^2 with q = q_p(2); solving for the Euler term requires the
    difference to be divisible by p.
    """
    m2 = p * p
    t = p * quotient % m2 * quotient % m2 * ((m2 + 1) // 2) % m2
    diff = (quotient - t - half_alt_sum) % m2
    if diff % p:
        raise DivisibilityAssertionFailed(
            f"p = {p}: Euler extraction difference {diff} not divisible by p"
        )
    return euler_sign(p) * (diff // p) % p


def euler_p3_mod(p: int) -> Residue:
    """E_{p-3} mod p, via the alternating half harmonic sum mod p^2.

    O(p) per prime, dominated by one batch inversion mod p^2.  The exact
    recurrence (euler_exact) is the independent oracle for this route.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"{p} is not a prime >= 5")
    mod2 = PrimePowerModulus(p, 2)
    s = alt_harmonic_mod((p - 1) // 2, mod2).value
    q = fermat_quotient(p, 2, 2).residue.value
    return Residue(euler_from_half_alt_sum(p, s, q), PrimePowerModulus(p, 1))
