import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fqlab.modring import (
    CountExceedsP,
    DenominatorDivisibleByP,
    ModulusError,
    NotInvertible,
    PrimePowerModulus,
    Residue,
    batch_inv,
    binom_mod,
    embed_rational,
    inv,
    is_prime,
    pow_mod,
)


def primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[:2] = [False, False]
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    return [i for i, b in enumerate(sieve) if b]


M5 = PrimePowerModulus(5, 1)
M25 = PrimePowerModulus(5, 2)
M125 = PrimePowerModulus(5, 3)
M625 = PrimePowerModulus(5, 4)


class TestModulus:
    def test_value(self):
        assert M125.m == 125
        assert PrimePowerModulus(997, 4).m == 997**4

    @pytest.mark.parametrize("p", [2, 3, 4, 9, 15, 2**31 + 11])
    def test_rejected_primes(self, p):
        with pytest.raises(ModulusError):
            PrimePowerModulus(p, 1)

    @pytest.mark.parametrize("e", [0, 5])
    def test_rejected_exponents(self, e):
        with pytest.raises(ModulusError):
            PrimePowerModulus(5, e)

    def test_is_prime_against_sieve(self):
        table = set(primes_upto(2000))
        for n in range(2000):
            assert is_prime(n) == (n in table)


class TestEmbed:
    def test_spec_examples(self):
        assert embed_rational(Fraction(25, 12), M5).value == 0
        assert embed_rational(Fraction(0, 1), M125).value == 0
        assert embed_rational(Fraction(1, 8), M25).value == 22

    def test_denominator_divisible(self):
        with pytest.raises(DenominatorDivisibleByP):
            embed_rational(Fraction(1, 10), M25)

    @given(
        a=st.fractions(max_denominator=500),
        b=st.fractions(max_denominator=500),
    )
    @settings(max_examples=200)
    def test_ring_homomorphism(self, a, b):
        for mod in (PrimePowerModulus(7, 1), PrimePowerModulus(13, 2)):
            if (a.denominator * b.denominator * (a * b).denominator
                    * (a + b).denominator) % mod.p == 0:
                continue
            ea, eb = embed_rational(a, mod), embed_rational(b, mod)
            assert ea * eb == embed_rational(a * b, mod)
            assert ea + eb == embed_rational(a + b, mod)


class TestInverse:
    def test_spec_examples(self):
        assert inv(Residue(1, M25)).value == 1
        assert inv(Residue(8, M25)).value == 22
        with pytest.raises(NotInvertible):
            inv(Residue(10, M25))

    def test_batch_examples(self):
        assert [r.value for r in batch_inv(4, M5)] == [1, 3, 2, 4]
        assert [r.value for r in batch_inv(1, M25)] == [1]
        assert [r.value for r in batch_inv(4, M25)] == [1, 13, 17, 19]

    def test_batch_count_exceeds(self):
        with pytest.raises(CountExceedsP):
            batch_inv(5, M25)

    def test_batch_matches_single_inverse(self):
        # spec invariant, all primes 5 <= p <= 997, e in {1, 2}
        for p in primes_upto(997):
            if p < 5:
                continue
            for e in (1, 2):
                mod = PrimePowerModulus(p, e)
                table = batch_inv(p - 1, mod)
                for k in range(1, p):
                    assert table[k - 1] == inv(Residue(k, mod))

    def test_batch_at_high_exponent(self):
        for e in (3, 4):
            mod = PrimePowerModulus(101, e)
            for k, r in enumerate(batch_inv(100, mod), start=1):
                assert k * r.value % mod.m == 1


class TestPow:
    def test_spec_examples(self):
        assert pow_mod(Residue(2, M25), 4).value == 16
        assert pow_mod(Residue(2, M5), 4).value == 1
        assert pow_mod(Residue(17, M625), 0).value == 1

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            pow_mod(Residue(2, M5), -1)


class TestBinom:
    def test_spec_examples(self):
        assert binom_mod(4, 2, M125).value == 6
        assert binom_mod(9, 4, M625).value == 126
        assert binom_mod(17, 0, M5).value == 1

    def test_against_exact_binomials(self):
        # all n <= 40, moduli p^e <= 10^6
        moduli = [
            PrimePowerModulus(p, e)
            for p in (5, 7, 11, 13, 31, 997)
            for e in (1, 2, 3, 4)
            if p**e <= 10**6
        ]
        for mod in moduli:
            for n in range(41):
                for k in range(n + 1):
                    assert binom_mod(n, k, mod).value == math.comb(n, k) % mod.m

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            binom_mod(3, 4, M5)


class TestResidueArithmetic:
    def test_modulus_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Residue(1, M5) + Residue(1, M25)

    def test_range_invariant(self):
        assert 0 <= (-Residue(3, M25)).value < 25
        assert (Residue(20, M25) + Residue(10, M25)).value == 5

    def test_lifting_consistency(self):
        # e=2 results reduced mod p agree with the e=1 computation
        mod1, mod2 = PrimePowerModulus(13, 1), PrimePowerModulus(13, 2)
        for k in range(1, 13):
            assert inv(Residue(k, mod2)).reduce_to(1) == inv(Residue(k, mod1))
        for (a, b) in [(3, 7), (12, 12), (5, 160)]:
            r2 = Residue(a, mod2) * Residue(b, mod2)
            assert r2.reduce_to(1) == Residue(a, mod1) * Residue(b, mod1)
        q = Fraction(22, 7)
        assert embed_rational(q, mod2).reduce_to(1) == embed_rational(q, mod1)
