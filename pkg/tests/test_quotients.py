import math
import threading

import pytest

from fqlab.quotients import (
    BaseDivisibleByP,
    BoundExceeded,
    euler_exact,
    euler_p3_mod,
    euler_sign,
    fermat_quotient,
)
from .test_modring import primes_upto


class TestFermatQuotient:
    def test_spec_examples(self):
        assert fermat_quotient(5, 2, 1).residue.value == 3
        assert fermat_quotient(7, 2, 1).residue.value == 2
        for p in (5, 13, 199):
            assert fermat_quotient(p, 1, 2).residue.value == 0

    def test_definition(self):
        for p, a in [(5, 2), (7, 3), (13, 10), (97, 2)]:
            q = (a ** (p - 1) - 1) // p
            assert fermat_quotient(p, a, 1).residue.value == q % p
            assert fermat_quotient(p, a, 3).residue.value == q % p**3

    def test_base_divisible(self):
        with pytest.raises(BaseDivisibleByP):
            fermat_quotient(7, 21, 1)

    def test_lifting(self):
        for p in primes_upto(997):
            if p < 5:
                continue
            assert (
                fermat_quotient(p, 2, 2).residue.value % p
                == fermat_quotient(p, 2, 1).residue.value
            )


class TestEulerExact:
    def test_spec_values(self):
        assert euler_exact(0).value == 1
        assert euler_exact(3).value == 0
        expected = {2: -1, 4: 5, 6: -61, 8: 1385, 10: -50521}
        for n, value in expected.items():
            assert euler_exact(n).value == value

    def test_odd_indices_vanish(self):
        assert all(euler_exact(n).value == 0 for n in range(1, 60, 2))

    def test_recurrence_residual(self):
        # sum over even k of C(n,k) E_{n-k} = 0 exactly, every even n <= 200
        for n in range(2, 201, 2):
            total = sum(
                math.comb(n, k) * euler_exact(n - k).value for k in range(0, n + 1, 2)
            )
            assert total == 0

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            euler_exact(2001)

    def test_concurrent_access(self):
        results = []

        def worker():
            results.append(euler_exact(300).value)

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert len(set(results)) == 1


class TestEulerModP:
    def test_spec_examples(self):
        assert euler_p3_mod(5).value == 4  # E_2 = -1
        assert euler_p3_mod(7).value == 5  # E_4 = 5
        assert euler_p3_mod(149).value == 0

    def test_cross_validation(self):
        # two fully independent algorithms, all primes 5 <= p <= 199
        for p in primes_upto(199):
            if p >= 5:
                assert euler_p3_mod(p).value == euler_exact(p - 3).value % p

    def test_sign_sanity(self):
        for p in primes_upto(997):
            if p >= 5:
                assert (euler_sign(p) == -1) == (p % 4 == 1)

    def test_rejects_nonprime(self):
        with pytest.raises(ValueError):
            euler_p3_mod(9)
