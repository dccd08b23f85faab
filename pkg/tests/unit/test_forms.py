"""
Unit tests for eigenform coefficients and the Rankin-Selberg bound.
"""

import numpy as np
import pytest

from src.core.constants import EISENSTEIN_MAX_COEFFICIENTS, MAX_COEFFICIENTS
from src.core.exceptions.verification import SizeLimitError, ValidationError
from src.numtheory.forms import (
    CuspForm,
    crt_lift,
    delta_coefficients,
    deligne_violations,
    divisor_counts,
    hecke_relation_defect,
    normalized_coefficients,
    rankin_selberg_check,
    rankin_selberg_constant,
    rankin_selberg_sum,
)

# tau(1..12)
RAMANUJAN_TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944]


@pytest.fixture(scope="module")
def delta() -> CuspForm:
    """Delta with the default cache."""
    return CuspForm()


@pytest.fixture(scope="module")
def delta_large() -> CuspForm:
    """Delta with 10^5 cached coefficients."""
    return CuspForm(cache_bound=10**5)


class TestDeltaCoefficients:
    """Test exact tau(n)."""

    def test_should_match_known_values(self) -> None:
        """Test the first twelve values of tau."""
        assert list(delta_coefficients(12)) == RAMANUJAN_TAU

    def test_should_be_multiplicative(self) -> None:
        """Test tau(6) = tau(2) tau(3) and tau(35) = tau(5) tau(7)."""
        tau = delta_coefficients(40)
        assert tau[5] == tau[1] * tau[2]
        assert tau[34] == tau[4] * tau[6]

    def test_should_stay_exact_for_large_values(self) -> None:
        """Test entries are Python integers beyond float precision."""
        tau = delta_coefficients(2000)
        assert isinstance(tau[-1], int)
        # Hecke relation at p = 2 with no float contamination
        assert tau[1023] == tau[1] * tau[511] - 2**11 * tau[255]

    def test_should_reject_oversized_request(self) -> None:
        """Test the 10^6 cap."""
        with pytest.raises(SizeLimitError, match="coefficient count"):
            delta_coefficients(MAX_COEFFICIENTS + 1)

    def test_should_lift_negative_residues_centered(self) -> None:
        """Test the CRT lift returns the centered representative."""
        primes = (7, 11)
        residues = np.array([[6, 5], [10, 5]], dtype=np.int64)

        lifted = crt_lift(residues, primes)

        assert list(lifted) == [-1, 5]


class TestHigherWeights:
    """Test Delta times Eisenstein series."""

    def test_should_expand_weight_16(self) -> None:
        """Test Delta E_4 = q + 216 q^2 - 3348 q^3."""
        form = CuspForm(weight=16, cache_bound=10)
        assert [form.coefficient(n) for n in range(4)] == [0, 1, 216, -3348]

    def test_should_expand_weight_18(self) -> None:
        """Test Delta E_6 = q - 528 q^2 - 4284 q^3."""
        form = CuspForm(weight=18, cache_bound=10)
        assert [form.coefficient(n) for n in range(4)] == [0, 1, -528, -4284]

    @pytest.mark.parametrize("weight", [16, 18, 20, 22, 26])
    def test_should_be_hecke_eigenforms(self, weight: int) -> None:
        """Test the prime-power Hecke relation at p = 2, 3."""
        form = CuspForm(weight=weight, cache_bound=300)
        for p, j in [(2, 1), (2, 3), (2, 7), (3, 1), (3, 4)]:
            assert hecke_relation_defect(form, p, j) == 0
        assert form.coefficient(6) == form.coefficient(2) * form.coefficient(3)

    def test_should_reject_unsupported_weight(self) -> None:
        """Test weights without a one-dimensional space."""
        with pytest.raises(ValidationError, match="Unsupported weight 14"):
            CuspForm(weight=14)

    def test_should_cap_eisenstein_cache(self) -> None:
        """Test the quadratic-convolution cap."""
        with pytest.raises(SizeLimitError):
            CuspForm(weight=16, cache_bound=EISENSTEIN_MAX_COEFFICIENTS + 1)


class TestNormalizedCoefficients:
    """Test lambda(n) = a(n) / n^((k-1)/2)."""

    def test_should_normalize_first_coefficients(self, delta: CuspForm) -> None:
        """Test lambda(1) = 1 and lambda(2) = -24 / 2^5.5."""
        table = normalized_coefficients(delta, 2)
        assert table[0] == 1.0
        assert table[1] == pytest.approx(-24 / 2**5.5, rel=1e-15)

    def test_should_pad_table_with_zero_at_index_zero(self, delta: CuspForm) -> None:
        """Test normalized_table(N)[n] = lambda(n)."""
        table = delta.normalized_table(10)
        assert len(table) == 11
        assert table[0] == 0.0
        assert table[3] == pytest.approx(252 / 3**5.5)

    def test_should_reject_index_beyond_cache(self, delta: CuspForm) -> None:
        """Test SizeLimit beyond the cache bound."""
        with pytest.raises(SizeLimitError):
            normalized_coefficients(delta, delta.cache_bound + 1)

    @pytest.mark.slow
    def test_should_satisfy_deligne_bound(self, delta_large: CuspForm) -> None:
        """Test |lambda(n)| <= d(n) for n <= 10^5."""
        assert deligne_violations(delta_large).size == 0

    @pytest.mark.slow
    def test_should_satisfy_hecke_relation_at_prime_powers(self, delta_large: CuspForm) -> None:
        """Test lambda(p) lambda(p^j) = lambda(p^(j+1)) + lambda(p^(j-1)) for p^(j+1) <= 10^5."""
        for p in [2, 3, 5, 7, 11, 13, 101, 311]:
            j = 1
            while p ** (j + 1) <= delta_large.cache_bound:
                assert hecke_relation_defect(delta_large, p, j) == 0
                j += 1


class TestDivisorCounts:
    """Test the divisor-count sieve."""

    def test_should_count_divisors(self) -> None:
        """Test d(n) for small n."""
        assert list(divisor_counts(12)) == [0, 1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6]


class TestRankinSelberg:
    """Test partial sums of lambda(n)^2."""

    def test_should_equal_one_at_x_one(self, delta: CuspForm) -> None:
        """Test only n = 1 contributes."""
        assert rankin_selberg_sum(delta, 1) == 1.0

    def test_should_match_direct_summation(self, delta: CuspForm) -> None:
        """Test S(100) against a sum built from exact tau."""
        tau = delta_coefficients(100)
        expected = sum(float(t) ** 2 / n**11 for n, t in enumerate(tau, start=1))
        assert rankin_selberg_sum(delta, 100.7) == pytest.approx(expected, rel=1e-12)

    def test_should_be_monotone(self, delta: CuspForm) -> None:
        """Test S(10^4) >= S(10^3)."""
        assert rankin_selberg_sum(delta, 1e4) >= rankin_selberg_sum(delta, 1e3)

    def test_should_reject_x_below_one(self, delta: CuspForm) -> None:
        """Test x >= 1 is required."""
        with pytest.raises(ValidationError):
            rankin_selberg_sum(delta, 0.5)

    def test_should_calibrate_constant_as_supremum(self, delta: CuspForm) -> None:
        """Test S(x) <= C x^1.01 on the calibration range."""
        constant = rankin_selberg_constant(delta, 1000)
        assert constant >= 1.0
        for x in [1, 10, 100, 1000]:
            assert rankin_selberg_sum(delta, x) <= constant * x**1.01 * (1 + 1e-12)

    @pytest.mark.slow
    def test_should_pass_bound_at_larger_x(self, delta_large: CuspForm) -> None:
        """Test the calibrated bound holds at 10^4 and 10^5."""
        reports = rankin_selberg_check(delta_large)
        assert len(reports) == 2
        assert all(report.passed for report in reports)
