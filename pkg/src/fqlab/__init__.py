"""Congruences of Fermat quotients and harmonic sums modulo prime powers.

Exact rational arithmetic, residue arithmetic mod p^e, a registry of named
congruence/identity checks, a parallel hunt for primes with vanishing
Euler-number residue, the Wolstenholme-prime test, and the statistical
expected-count heuristic.
"""

from fqlab.modring import (
    PrimePowerModulus,
    Rational,
    Residue,
    batch_inv,
    binom_mod,
    embed_rational,
    inv,
    pow_mod,
)
from fqlab.quotients import euler_exact, euler_p3_mod, fermat_quotient
from fqlab.suite import check_all, check_congruence, verify_identity
from fqlab.hunter import hunt_euler, sieve_primes, wolstenholme_test
from fqlab.heuristic import expected_count, prime_reciprocal_sum

__version__ = "1.0.0"

__all__ = [
    "PrimePowerModulus",
    "Rational",
    "Residue",
    "batch_inv",
    "binom_mod",
    "check_all",
    "check_congruence",
    "embed_rational",
    "euler_exact",
    "euler_p3_mod",
    "expected_count",
    "fermat_quotient",
    "hunt_euler",
    "inv",
    "pow_mod",
    "prime_reciprocal_sum",
    "sieve_primes",
    "verify_identity",
    "wolstenholme_test",
]
