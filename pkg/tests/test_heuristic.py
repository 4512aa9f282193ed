import math

import pytest

from fqlab.heuristic import (
    InvalidInterval,
    RangeTooLarge,
    density_estimate,
    expected_count,
    prime_reciprocal_sum,
)


class TestExpectedCount:
    def test_paper_figures(self):
        assert abs(expected_count(3 * 10**6, 10**18).formula_value - 1.0221) < 5e-4
        assert abs(expected_count(2, 3 * 10**6).formula_value - 3.06882) < 5e-4

    def test_degenerate_interval(self):
        assert expected_count(17, 17).formula_value == 0.0

    def test_monotone_in_upper_bound(self):
        values = [expected_count(100, y).formula_value for y in (10**3, 10**6, 10**9)]
        assert values == sorted(values)

    def test_invalid_interval(self):
        with pytest.raises(InvalidInterval):
            expected_count(1.5, 100)
        with pytest.raises(InvalidInterval):
            expected_count(100, 10)


class TestPrimeReciprocalSum:
    def test_examples(self):
        expected = 1 / 2 + 1 / 3 + 1 / 5 + 1 / 7
        assert math.isclose(prime_reciprocal_sum(2, 10), expected, rel_tol=1e-15)
        assert prime_reciprocal_sum(8, 10) == 0.0

    def test_monotone(self):
        assert prime_reciprocal_sum(2, 100) <= prime_reciprocal_sum(2, 1000)

    def test_additivity(self):
        a = prime_reciprocal_sum(2, 5000)
        b = prime_reciprocal_sum(5001, 20000)
        assert abs(a + b - prime_reciprocal_sum(2, 20000)) < 1e-12

    def test_range_too_large(self):
        with pytest.raises(RangeTooLarge):
            prime_reciprocal_sum(2, 10**8 + 1)

    def test_exact_sum_differs_from_formula_at_2(self):
        # over [2, 3e6] the exact sum is ~2.96 while the formula gives 3.06882;
        # both are reported side by side
        est = density_estimate(2, 3 * 10**6)
        assert est.exact_sum is not None
        assert 2.95 < est.exact_sum < 2.98
        assert abs(est.formula_value - 3.06882) < 5e-4


class TestDensityEstimate:
    def test_formula_only_beyond_sieve_range(self):
        est = density_estimate(3 * 10**6, 10**18)
        assert est.exact_sum is None

    def test_includes_exact_when_feasible(self):
        est = density_estimate(2, 1000)
        assert math.isclose(est.exact_sum, prime_reciprocal_sum(2, 1000))
