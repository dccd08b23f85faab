"""
Unit tests for the approximate functional equation and central values.
"""

from math import log, pi, sqrt

import numpy as np
import numpy.typing as npt
import pytest
from scipy.integrate import quad
from scipy.special import gammaincc
from scipy.stats import gamma, hypsecant, norm

from src.core.enums import ContourWeight
from src.core.exceptions.verification import (
    PreconditionViolatedError,
    RootNumberInconsistentError,
    SizeLimitError,
    ValidationError,
)
from src.core.models.config import AfeConfig
from src.lvalue.afe import (
    afe_truncation,
    central_value,
    cutoff_table,
    predicted_root_number,
    reality_report,
    residual_report,
    rotated_value,
    v_weight,
    weight_agreement,
)
from src.numtheory.characters import make_character, quadratic_character
from src.numtheory.forms import CuspForm

# a = 1/2 + (12 - 1) / 2
GAMMA_SHIFT = 6.0


def mixture_survival(Y: float, survival) -> float:  # type: ignore[no-untyped-def]
    """P(W e^Z > Y) with W ~ Gamma(6) and the survival function of Z."""
    value, _ = quad(
        lambda w: gamma.pdf(w, GAMMA_SHIFT) * survival(log(Y / w)), 0, np.inf, limit=200
    )
    return float(value)


class RandomCoefficients:
    """Seeded coefficients with no functional equation."""

    weight = 12

    def __init__(self, cache_bound: int) -> None:
        self._table = np.random.default_rng(11).normal(size=cache_bound + 1)
        self._table[0] = 0.0

    @property
    def cache_bound(self) -> int:
        return self._table.size - 1

    def normalized_table(self, N: int) -> npt.NDArray[np.float64]:
        return self._table[: N + 1]


@pytest.fixture(scope="module")
def secant_form() -> CuspForm:
    """Delta with enough coefficients for the secant weight at conductor 27."""
    return CuspForm(12, cache_bound=afe_truncation(27, 12, ContourWeight.SECANT))


class TestCutoffWeight:
    """Test V_s(y) against closed forms and probabilistic representations."""

    def test_should_approach_one_for_small_y(self) -> None:
        """Test V(10^-6) = 1 within 10^-4."""
        assert abs(v_weight(1e-6) - 1) < 1e-4

    @pytest.mark.parametrize("y", [0.05, 0.5, 1.0, 3.0, 10.0])
    def test_should_match_incomplete_gamma_for_unit_weight(self, y: float) -> None:
        """Test G = 1 gives Gamma(a, Y) / Gamma(a)."""
        expected = gammaincc(GAMMA_SHIFT, 2 * pi * y)

        assert v_weight(y, G=ContourWeight.UNIT) == pytest.approx(expected, abs=1e-9)

    def test_should_decay_at_fifty_for_unit_weight(self) -> None:
        """Test |V(50)| < 10^-8 when G = 1."""
        assert abs(v_weight(50.0, G=ContourWeight.UNIT)) < 1e-8

    @pytest.mark.parametrize("y", [0.2, 1.0, 20.0])
    def test_should_match_lognormal_mixture_for_exp_square(self, y: float) -> None:
        """Test exp(u^2) is the moment function of N(0, 2)."""
        expected = mixture_survival(2 * pi * y, lambda z: norm.sf(z / sqrt(2)))

        assert v_weight(y) == pytest.approx(expected, abs=1e-7)

    @pytest.mark.parametrize("y", [0.2, 1.0, 20.0])
    def test_should_match_hyperbolic_secant_mixture(self, y: float) -> None:
        """Test 1 / cos(pi u / 8) is the moment function of a quarter-scaled hyperbolic secant."""
        expected = mixture_survival(2 * pi * y, lambda z: hypsecant.sf(4 * z))

        assert v_weight(y, G=ContourWeight.SECANT) == pytest.approx(expected, abs=1e-7)

    def test_should_be_stable_under_step_halving(self) -> None:
        """Test V(1) moves by less than 10^-9 when the step halves."""
        coarse = v_weight(1.0, step=0.05)
        fine = v_weight(1.0, step=0.025)

        assert abs(coarse - fine) < 1e-9

    def test_should_scale_with_conductor(self) -> None:
        """Test V depends on y and P through 2 pi y / P only."""
        assert v_weight(3.0, P=27) == pytest.approx(v_weight(1.0, P=9), abs=1e-12)

    def test_should_reject_non_positive_y(self) -> None:
        """Test y = 0."""
        with pytest.raises(ValidationError, match="y"):
            v_weight(0.0)


class TestCutoffTable:
    """Test the tabulated cutoff and its tail."""

    @pytest.mark.parametrize("Y", [0.3, 3.3, 17.7])
    def test_should_interpolate_between_knots(self, Y: float) -> None:
        """Test the spline against direct quadrature off the knots."""
        table = cutoff_table(0.5, 12, ContourWeight.SECANT)

        direct = v_weight(Y / (2 * pi), G=ContourWeight.SECANT)

        assert table(np.array([Y]))[0] == pytest.approx(direct, abs=1e-8)

    def test_should_clamp_outside_the_grid(self) -> None:
        """Test V = 1 below the grid and 0 above it."""
        table = cutoff_table(0.5, 12, ContourWeight.UNIT)

        values = table(np.array([1e-9, 1e9]))

        assert values[0] == pytest.approx(1.0, abs=1e-12)
        assert values[1] == 0

    def test_should_place_tail_beyond_last_significant_value(self) -> None:
        """Test |V| is below the tail tolerance past tail_y."""
        table = cutoff_table(0.5, 12, ContourWeight.UNIT)

        assert abs(v_weight(table.tail_y / (2 * pi), G=ContourWeight.UNIT)) <= 1e-10
        assert gammaincc(GAMMA_SHIFT, table.tail_y) < 1e-10

    def test_should_order_tails_by_weight(self) -> None:
        """Test the Gamma tail is shortest and the log-normal tail longest."""
        unit, secant, exp_square = (
            cutoff_table(0.5, 12, G).tail_y
            for G in (ContourWeight.UNIT, ContourWeight.SECANT, ContourWeight.EXP_SQUARE)
        )

        assert unit < secant < exp_square


class TestTruncation:
    """Test the length of the AFE sums."""

    def test_should_not_fall_below_conductor_heuristic(self) -> None:
        """Test 30 sqrt(P) (k / 2 pi) log(P + 10) is a floor."""
        heuristic = 30 * sqrt(27) * (12 / (2 * pi)) * log(37)

        assert afe_truncation(27, 12, ContourWeight.UNIT) >= heuristic

    def test_should_grow_with_tail_length(self) -> None:
        """Test slower-decaying weights need longer sums."""
        lengths = [
            afe_truncation(27, 12, G)
            for G in (ContourWeight.UNIT, ContourWeight.SECANT, ContourWeight.EXP_SQUARE)
        ]

        assert lengths == sorted(lengths)
        assert lengths[0] < lengths[2]


class TestCentralValue:
    """Test L(Delta x chi, 1/2)."""

    def test_should_reject_trivial_character(self, secant_form: CuspForm) -> None:
        """Test the trivial character modulo 3."""
        with pytest.raises(PreconditionViolatedError, match="primitive"):
            central_value(secant_form, make_character(3, 1, 0))

    def test_should_reject_imprimitive_character(self, secant_form: CuspForm) -> None:
        """Test index 3 modulo 9 is induced from modulo 3."""
        with pytest.raises(PreconditionViolatedError, match="primitive"):
            central_value(secant_form, make_character(3, 2, 3))

    def test_should_require_coefficients_up_to_truncation(self) -> None:
        """Test a cache of 100 coefficients at conductor 27."""
        with pytest.raises(SizeLimitError, match="AFE truncation"):
            central_value(CuspForm(12, cache_bound=100), make_character(3, 3, 1))

    def test_should_be_stable_in_balance_parameter(self, secant_form: CuspForm) -> None:
        """Test X = 1, 2 and 1/2 agree modulo 27 and the root number is i^k tau^2 / P."""
        chi = make_character(3, 3, 1)

        value = central_value(secant_form, chi, AfeConfig(G=ContourWeight.SECANT))

        assert value.is_accepted
        assert value.root_number_unit == 1
        assert value.root_number == pytest.approx(predicted_root_number(chi, 12))
        assert residual_report(value).passed

    def test_should_vanish_for_odd_quadratic_twist(self, secant_form: CuspForm) -> None:
        """Test chi(-1) = -1 forces eps = -1 and L(1/2) = 0."""
        config = AfeConfig(G=ContourWeight.SECANT)

        value = central_value(secant_form, quadratic_character(3), config)

        assert value.root_number == pytest.approx(-1.0)
        assert value.abs_value < 1e-8

    def test_should_be_real_for_even_quadratic_twist(self, secant_form: CuspForm) -> None:
        """Test chi modulo 5 is even, so eps = 1 and L(1/2) is real."""
        config = AfeConfig(G=ContourWeight.SECANT)

        value = central_value(secant_form, quadratic_character(5), config)

        assert value.root_number == pytest.approx(1.0)
        assert abs(value.value.imag) < 1e-8
        assert reality_report(value).passed

    @pytest.mark.parametrize("index", [1, 2, 4, 5])
    def test_should_rotate_to_real_value(self, secant_form: CuspForm, index: int) -> None:
        """Test eps^(-1/2) L(1/2) is real for complex characters modulo 27."""
        chi = make_character(3, 3, index)

        value = central_value(secant_form, chi, AfeConfig(G=ContourWeight.SECANT))

        assert abs(rotated_value(value).imag) < 1e-8
        assert value.to_dict()["truncation"] == value.truncation

    def test_should_agree_across_weights(self, secant_form: CuspForm) -> None:
        """Test G = 1 and the secant weight give the same value modulo 27."""
        report = weight_agreement(
            secant_form, make_character(3, 3, 2), (ContourWeight.UNIT, ContourWeight.SECANT)
        )

        assert report.passed
        assert report.rel_err < 1e-5

    @pytest.mark.slow
    def test_should_agree_with_exp_square_weight(self) -> None:
        """Test G = exp(u^2) against the secant weight modulo 27."""
        form = CuspForm(12, cache_bound=afe_truncation(27, 12, ContourWeight.EXP_SQUARE))

        report = weight_agreement(form, make_character(3, 3, 1))

        assert report.passed

    def test_should_detect_missing_functional_equation(self) -> None:
        """Test random coefficients leave no unimodular root number."""
        source = RandomCoefficients(afe_truncation(27, 12, ContourWeight.UNIT))

        with pytest.raises(RootNumberInconsistentError):
            central_value(source, make_character(3, 3, 1), AfeConfig(G=ContourWeight.UNIT))
