"""Exact rationals and rational-residue arithmetic modulo p^e.

Residues follow the usual convention for fractions m/n with p-free
denominator: the class of m/n mod p^e is m * n' where n' is the modular
inverse of n.  All values are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

# Ground-truth value domain for identities.  Fraction is always reduced,
# keeps its denominator positive, and represents zero as 0/1.
Rational = Fraction

MAX_PRIME = 2**31
MAX_EXPONENT = 4

# Deterministic Miller-Rabin witness set for n < 3.3 * 10^24, far beyond
# the supported p < 2^31.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ModulusError(ValueError):
    """Invalid prime-power modulus."""


class DenominatorDivisibleByP(ValueError):
    """A rational with p in its denominator has no residue mod p^e."""


class NotInvertible(ValueError):
    """Residue shares a factor with the modulus."""


class CountExceedsP(ValueError):
    """Batch operations over 1..n require n < p."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (valid for n < 2^64)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimePowerModulus:
    """The modulus p^e with p an odd prime >= 5 and e in 1..4."""

    p: int
    e: int
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.e <= MAX_EXPONENT:
            raise ModulusError(f"exponent {self.e} outside 1..{MAX_EXPONENT}")
        if self.p >= MAX_PRIME:
            raise ModulusError(f"prime {self.p} >= 2^31")
        if self.p < 5 or not is_prime(self.p):
            # p = 2 and p = 3 are rejected: the congruences housed here
            # require odd p, almost all of them p >= 5.
            raise ModulusError(f"{self.p} is not a prime >= 5")
        object.__setattr__(self, "m", self.p**self.e)

    def __str__(self) -> str:
        return f"{self.p}^{self.e}"


@dataclass(frozen=True)
class Residue:
    """An element of Z/p^e, always stored in [0, m)."""

    value: int
    modulus: PrimePowerModulus

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.modulus.m)

    def _same(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "Residue") -> "Residue":
        self._same(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._same(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._same(other)
        return Residue(self.value * other.value, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0

    def reduce_to(self, e: int) -> "Residue":
        """The image of this residue in the smaller ring Z/p^e."""
        if e > self.modulus.e:
            raise ModulusError("cannot lift a residue to a larger modulus")
        mod = PrimePowerModulus(self.modulus.p, e)
        return Residue(self.value % mod.m, mod)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _inv_int(a: int, m: int) -> int:
    g, x, _ = _egcd(a % m, m)
    if g != 1:
        raise NotInvertible(f"{a} is not invertible mod {m}")
    return x % m


def inv(r: Residue) -> Residue:
    """Multiplicative inverse, by extended Euclid."""
    return Residue(_inv_int(r.value, r.modulus.m), r.modulus)


def embed_rational(q: Rational, mod: PrimePowerModulus) -> Residue:
    """The residue class of a fraction with p-free denominator."""
    q = Fraction(q)
    if q.denominator % mod.p == 0:
        raise DenominatorDivisibleByP(
            f"denominator {q.denominator} divisible by {mod.p}"
        )
    return Residue(q.numerator * _inv_int(q.denominator, mod.m), mod)


def _batch_inv_raw(n: int, p: int, e: int, m: int) -> list[int]:
    """inv[k] = k^-1 mod p^e for k = 0..n (inv[0] unused), raw integers.

    Mod-p inverses come from the standard recurrence
    inv[i] = -(p // i) * inv[p mod i]; each is then lifted to p^e by
    Newton steps x <- x * (2 - i*x), one step per doubling of precision.
    """
    if n >= p:
        raise CountExceedsP(f"n = {n} >= p = {p}")
    inv1 = [0] * (n + 1)
    if n >= 1:
        inv1[1] = 1
    for i in range(2, n + 1):
        inv1[i] = (p - (p // i) * inv1[p % i] % p) % p
    if e == 1:
        return inv1
    steps = 1 if e == 2 else 2  # one step reaches p^2, two reach p^4
    out = [0] * (n + 1)
    for i in range(1, n + 1):
        x = inv1[i]
        for _ in range(steps):
            x = x * (2 - i * x) % m
        out[i] = x
    return out


def batch_inv(n: int, mod: PrimePowerModulus) -> list[Residue]:
    """Inverses of 1..n mod p^e with O(n) multiplications total."""
    raw = _batch_inv_raw(n, mod.p, mod.e, mod.m)
    return [Residue(v, mod) for v in raw[1:]]


def pow_mod(base: Residue, exp: int) -> Residue:
    """base^exp by square-and-multiply; exp = 0 gives 1."""
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return Residue(pow(base.value, exp, base.modulus.m), base.modulus)


def binom_mod(n: int, k: int, mod: PrimePowerModulus) -> Residue:
    """C(n, k) mod p^e via the product of (n-k+i)/i with p-adic bookkeeping.

    Powers of p are stripped from every factor and counted separately for
    numerator and denominator; the result is the unit-part ratio times
    p^(v_num - v_den).  The difference is never negative for binomials.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n} k={k}")
    p, m = mod.p, mod.m
    unit_num = 1
    unit_den = 1
    v_num = 0
    v_den = 0
    for i in range(1, k + 1):
        a = n - k + i
        while a % p == 0:
            a //= p
            v_num += 1
        b = i
        while b % p == 0:
            b //= p
            v_den += 1
        unit_num = unit_num * (a % m) % m
        unit_den = unit_den * (b % m) % m
    v = v_num - v_den
    assert v >= 0, "binomial coefficients are integers"
    if v >= mod.e:
        return Residue(0, mod)
    return Residue(unit_num * _inv_int(unit_den, m) * p**v, mod)
