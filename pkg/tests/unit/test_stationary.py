"""
Unit tests for stationary and non-stationary phase.
"""

import numpy as np
import numpy.typing as npt
import pytest
import sympy

from src.core.enums import CheckKind
from src.core.exceptions.verification import (
    MultipleStationaryPointsError,
    NoStationaryPointError,
    ValidationError,
)
from src.core.models.report import VerificationReport
from src.core.protocols import PhaseFamily
from src.transforms.stationary import (
    PhaseFunction,
    nonstationary_bound_check,
    stationary_phase_decay,
    stationary_phase_main_term,
    stationary_phase_verify,
)
from src.transforms.windows import SmoothWindow

x = sympy.Symbol("x", real=True)


class TestStationaryPhase:
    """Test the main term on T (x - 3/2)^2."""

    @pytest.mark.parametrize("T", [1e3, 1e4])
    def test_should_lie_within_error_budget(self, T: float) -> None:
        """Test |I - main| stays below the budget."""
        report = stationary_phase_verify(T)
        assert report.passed
        assert report.truncation["x0"] == pytest.approx(1.5, abs=1e-12)

    @pytest.mark.slow
    def test_should_shrink_relative_discrepancy(self) -> None:
        """Test the relative discrepancy improves by 2.5x from T = 1e3 to 1e4."""
        report = stationary_phase_decay(stationary_phase_verify(1e3), stationary_phase_verify(1e4))

        assert report.passed
        assert report.rhs.real == pytest.approx(2.5)
        assert report.check is CheckKind.DECAY

    def test_should_flag_slow_decay(self) -> None:
        """Test a ratio of 2 per decade falls short of 2.5."""
        low, high = (
            VerificationReport.bound(
                "stationary_phase", d, 1.0, params={"T": T, "relative_discrepancy": d}
            )
            for T, d in ((1e3, 2e-3), (1e4, 1e-3))
        )

        report = stationary_phase_decay(low, high)

        assert not report.passed
        assert report.lhs.real == pytest.approx(2.0)
        assert report.abs_err == pytest.approx(0.5)

    def test_should_reject_monotone_phase(self) -> None:
        """Test f' > 0 everywhere has no stationary point."""
        phase = PhaseFunction.from_expression(x, x)
        with pytest.raises(NoStationaryPointError):
            stationary_phase_main_term(SmoothWindow(), phase, 1.0, 2.0, 1.0, 1.0, 0.35)

    def test_should_reject_several_stationary_points(self) -> None:
        """Test sin(20 x) on [0, 1]."""
        phase = PhaseFunction.from_expression(sympy.sin(20 * x), x)
        with pytest.raises(MultipleStationaryPointsError, match="unique"):
            stationary_phase_main_term(lambda t: 1.0, phase, 0.0, 1.0, 20.0, 1.0, 1.0)

    def test_should_reject_non_positive_frequency(self) -> None:
        """Test T <= 0."""
        with pytest.raises(ValidationError, match="T must be positive"):
            stationary_phase_verify(0.0)


def linear_family(t: npt.NDArray[np.float64], scale: float) -> npt.NDArray[np.float64]:
    return scale * t


def curved_family(t: npt.NDArray[np.float64], scale: float) -> npt.NDArray[np.float64]:
    return scale * (t + t**2 / 10)


class TestNonstationaryDecay:
    """Test |I(B)| decay as the phase scale doubles."""

    @pytest.mark.parametrize("family", [linear_family, curved_family])
    @pytest.mark.parametrize("j", [1, 2])
    def test_should_decay_for_non_stationary_phases(self, family: PhaseFamily, j: int) -> None:
        """Test Bx and B(x + x^2 / 10) against a bump amplitude."""
        report = nonstationary_bound_check(SmoothWindow(), family, 1.0, 2.0, 10.0, j)
        assert report.passed
        assert report.check is CheckKind.DECAY
        assert len(report.params["envelopes"]) == 4

    def test_should_pass_for_zero_amplitude(self) -> None:
        """Test g = 0 gives vanishing envelopes."""
        report = nonstationary_bound_check(lambda t: 0.0, linear_family, 1.0, 2.0, 10.0, 1)
        assert report.passed
        assert report.params["envelopes"] == [0.0, 0.0, 0.0, 0.0]

    def test_should_calibrate_constant_at_smallest_scale(self) -> None:
        """Test C_j = envelope(B) B^j (1 + slack) when no constant is given."""
        report = nonstationary_bound_check(SmoothWindow(), linear_family, 1.0, 2.0, 10.0, 1)

        assert report.params["C_j_calibrated"]
        assert report.params["C_j"] == pytest.approx(report.params["envelopes"][0] * 10.0 * 1.05)
        assert report.params["measured_C_j"] <= report.params["C_j"]

    def test_should_accept_generous_constant(self) -> None:
        """Test |I| <= 1 <= 100 / 80 on every octave of B = 10."""
        report = nonstationary_bound_check(SmoothWindow(), linear_family, 1.0, 2.0, 10.0, 1, C_j=100.0)

        assert report.passed
        assert not report.params["C_j_calibrated"]

    def test_should_fail_with_too_small_constant(self) -> None:
        """Test C_j far below the measured constant fails even though the decay ratios hold."""
        calibrated = nonstationary_bound_check(SmoothWindow(), linear_family, 1.0, 2.0, 10.0, 1)
        small = calibrated.params["measured_C_j"] / 10

        report = nonstationary_bound_check(SmoothWindow(), linear_family, 1.0, 2.0, 10.0, 1, C_j=small)

        assert calibrated.passed
        assert not report.passed
        assert report.params["C_j"] == small

    def test_should_reject_non_positive_constant(self) -> None:
        """Test C_j = 0."""
        with pytest.raises(ValidationError, match="C_j must be positive"):
            nonstationary_bound_check(SmoothWindow(), linear_family, 1.0, 2.0, 10.0, 1, C_j=0.0)

    def test_should_flag_stationary_phase(self) -> None:
        """Test a phase with f' = 0 inside fails the hypothesis."""

        def stationary(t: npt.NDArray[np.float64], scale: float) -> npt.NDArray[np.float64]:
            return scale * (t - 1.5) ** 2

        report = nonstationary_bound_check(SmoothWindow(), stationary, 1.0, 2.0, 10.0, 1)
        assert not report.passed
        assert report.params["min_abs_derivative"] < 10.0
