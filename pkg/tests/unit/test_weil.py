"""
Unit tests for mixed character sums against the Weil bound.
"""

import math

import pytest

from src.charsums.rational import RationalFunction
from src.charsums.weil import weil_bound, weil_sum
from src.core.exceptions.verification import (
    DegenerateFunctionError,
    PreconditionViolatedError,
    SizeLimitError,
)
from src.numtheory.characters import make_character, quadratic_character


class TestExactValues:
    """Test classical Legendre sums."""

    def test_should_vanish_for_linear_argument(self) -> None:
        """Test the full Legendre sum over GF(101) is 0."""
        result = weil_sum(quadratic_character(101), RationalFunction.polynomial(101, (1, 0)))

        assert abs(result.value) < 1e-9
        assert result.bound == 0.0
        assert result.satisfied

    def test_should_give_minus_one_for_product_of_distinct_linears(self) -> None:
        """Test sum over x mod 7 of (x(x + 1) / 7) = -1."""
        result = weil_sum(quadratic_character(7), RationalFunction.polynomial(7, (1, 1, 0)))

        assert result.value == pytest.approx(-1.0, abs=1e-9)
        assert result.bound == pytest.approx(math.sqrt(7))
        assert result.satisfied

    def test_should_respect_bound_for_cubic(self) -> None:
        """Test |sum (x^3 + x + 1 / 101)| <= 2 sqrt(101)."""
        result = weil_sum(quadratic_character(101), RationalFunction.polynomial(101, (1, 0, 1, 1)))

        assert result.bound == pytest.approx(2 * math.sqrt(101))
        assert result.satisfied
        assert result.notes["n1"] == 4


class TestPointAtInfinity:
    """Test the affine sum against the projective bound."""

    def test_should_allow_missing_regular_point_at_infinity(self) -> None:
        """Test (x - 1) / (x - 2) permutes the projective line, so the affine sum is -1."""
        result = weil_sum(quadratic_character(11), RationalFunction(11, (1, -1), (1, -2)))

        assert result.value == pytest.approx(-1.0, abs=1e-9)
        assert result.bound == 0.0
        assert result.notes["infinity_term"] == 1
        assert result.satisfied

    def test_should_not_allow_term_when_infinity_is_a_pole(self) -> None:
        """Test g = x(x + 1) has a pole at infinity."""
        result = weil_sum(quadratic_character(7), RationalFunction.polynomial(7, (1, 1, 0)))

        assert result.notes["infinity_term"] == 0


class TestMixedSums:
    """Test sums with an additive twist."""

    def test_should_recover_quadratic_gauss_sum(self) -> None:
        """Test trivial chi, g = 1 and f = x^2 give |S| = sqrt(p), at the bound."""
        p = 11
        result = weil_sum(
            make_character(p, 1, 0),
            RationalFunction.polynomial(p, (1,)),
            RationalFunction.polynomial(p, (1, 0, 0)),
        )

        assert abs(result.value) == pytest.approx(math.sqrt(p), abs=1e-9)
        assert result.bound == pytest.approx(math.sqrt(p))
        assert result.satisfied

    def test_should_skip_poles_of_additive_argument(self) -> None:
        """Test f = 1 / x drops the x = 0 term and enters the bound."""
        p = 11
        result = weil_sum(
            quadratic_character(p),
            RationalFunction.polynomial(p, (1, 1)),
            RationalFunction(p, (1,), (1, 0)),
        )

        assert result.notes["n2"] == 1
        assert result.notes["deg_f_inf"] == 1
        assert result.bound == pytest.approx(2 * math.sqrt(p))
        assert result.satisfied

    def test_should_accept_square_with_nonconstant_twist(self) -> None:
        """Test a square g is admissible once f is not constant."""
        p = 13
        result = weil_sum(
            quadratic_character(p),
            RationalFunction.polynomial(p, (1, 2, 1)),
            RationalFunction.polynomial(p, (1, 0)),
        )

        assert result.satisfied


class TestWeilBound:
    """Test the geometric complexity count."""

    def test_should_floor_at_zero(self) -> None:
        """Test g = x and f = 0 give a bound of 0."""
        assert weil_bound(RationalFunction.polynomial(7, (1, 0)), RationalFunction.zero(7)) == 0.0

    def test_should_add_additive_complexity(self) -> None:
        """Test g = x, f = x^2 give (2 + 1 - 2 + 2) sqrt(p)."""
        bound = weil_bound(
            RationalFunction.polynomial(7, (1, 0)), RationalFunction.polynomial(7, (1, 0, 0))
        )

        assert bound == pytest.approx(3 * math.sqrt(7))


class TestDegenerateInputs:
    """Test inputs outside the lemma."""

    def test_should_reject_square_for_legendre(self) -> None:
        """Test (x + 1)^2 with the Legendre symbol and f = 0."""
        with pytest.raises(DegenerateFunctionError, match="2-th power"):
            weil_sum(quadratic_character(7), RationalFunction.polynomial(7, (1, 2, 1)))

    def test_should_accept_square_for_cubic_character(self) -> None:
        """Test (x + 1)^2 is not a cube, so a character of order 3 applies."""
        chi = make_character(7, 1, 2)

        assert chi.order == 3
        assert weil_sum(chi, RationalFunction.polynomial(7, (1, 2, 1))).satisfied

    def test_should_reject_zero_function(self) -> None:
        """Test g = 0."""
        with pytest.raises(DegenerateFunctionError, match="identically zero"):
            weil_sum(quadratic_character(7), RationalFunction.zero(7))

    def test_should_reject_mismatched_primes(self) -> None:
        """Test chi modulo 7 against g over GF(11)."""
        with pytest.raises(PreconditionViolatedError, match="modulo 11"):
            weil_sum(quadratic_character(7), RationalFunction.polynomial(11, (1, 0)))

    def test_should_reject_large_primes(self) -> None:
        """Test p above the brute-force cap."""
        p = 10007
        with pytest.raises(SizeLimitError, match="Weil sum prime"):
            weil_sum(make_character(p, 1, 1), RationalFunction.polynomial(p, (1, 0)))
