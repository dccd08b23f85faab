"""
Unit tests for utility decorators.
Testing input validation and verification logging.
"""
# ruff: noqa: ARG001

from unittest.mock import Mock, patch

import pytest

from src.core.enums import ContourWeight
from src.core.exceptions.verification import ValidationError
from src.core.models.report import VerificationReport
from src.core.utils.decorators import log_verification, validate_inputs


class TestValidateInputsDecorator:
    """Test suite for @validate_inputs decorator."""

    @pytest.mark.parametrize("name", ["N", "Q", "X", "y"])
    def test_should_reject_non_positive_scale(self, name: str) -> None:
        """Test each positive parameter is checked by name."""

        @validate_inputs
        def scaled(N: float = 1.0, Q: float = 1.0, X: float = 1.0, y: float = 1.0) -> bool:
            return True

        assert scaled(**{name: 2.0}) is True
        with pytest.raises(ValidationError, match=f"Invalid {name}: {name} must be positive"):
            scaled(**{name: 0.0})

    def test_should_ignore_unlisted_parameters(self) -> None:
        """Test n and ell may be zero or negative."""

        @validate_inputs
        def test_function(n: int, ell: int) -> int:
            return n + ell

        assert test_function(-3, 0) == -3

    def test_should_apply_defaults_before_validation(self) -> None:
        """Test a bad default is caught too."""

        @validate_inputs
        def test_function(Q: float = -1.0) -> float:
            return Q

        with pytest.raises(ValidationError, match="Invalid Q"):
            test_function()

    def test_should_skip_non_numeric_values(self) -> None:
        """Test Q given as a sequence is left to the function."""

        @validate_inputs
        def test_function(Q: list[float]) -> int:
            return len(Q)

        assert test_function([3.0, 7.0]) == 2


class TestLogVerificationDecorator:
    """Test suite for @log_verification decorator."""

    @patch("loguru.logger")
    def test_should_log_start_and_success(self, mock_logger: Mock) -> None:
        """Test entry at debug level and a success record with the outcome."""

        @log_verification
        def test_function(n: int, Q: float, G: ContourWeight) -> VerificationReport:
            return VerificationReport.compare("delta", 0.0, 0.0, 1e-8)

        report = test_function(5, 7.0, ContourWeight.UNIT)

        assert report.passed
        assert mock_logger.debug.call_count == 1
        assert mock_logger.success.call_count == 1

        entry_call = mock_logger.debug.call_args
        assert "Verification started: test_function" in entry_call[0][0]
        entry_context = entry_call[1]["extra"]
        assert "correlation_id" in entry_context
        assert entry_context["n"] == 5
        assert entry_context["Q"] == 7.0
        assert "G" not in entry_context

        success_context = mock_logger.success.call_args[1]["extra"]
        assert success_context["success"] is True
        assert success_context["passed"] is True
        assert success_context["result_type"] == "VerificationReport"
        assert "execution_time_ms" in success_context

    @patch("loguru.logger")
    def test_should_warn_on_failed_check(self, mock_logger: Mock) -> None:
        """Test a report with passed = False is logged as a warning."""

        @log_verification
        def test_function(q: int) -> VerificationReport:
            return VerificationReport.bound("bound", 2.0, 1.0)

        test_function(3)

        assert mock_logger.warning.call_count == 1
        assert mock_logger.success.call_count == 0
        assert mock_logger.warning.call_args[1]["extra"]["passed"] is False

    @patch("loguru.logger")
    def test_should_log_failure_and_reraise(self, mock_logger: Mock) -> None:
        """Test exceptions are logged with their type and re-raised."""

        @log_verification
        def test_function(p: int) -> VerificationReport:
            raise ValidationError("p must be positive, got 0")

        with pytest.raises(ValidationError, match="p must be positive"):
            test_function(0)

        assert mock_logger.error.call_count == 1
        error_context = mock_logger.error.call_args[1]["extra"]
        assert error_context["success"] is False
        assert error_context["error_type"] == "ValidationError"
        assert error_context["error_message"] == "p must be positive, got 0"

    @patch("loguru.logger")
    def test_should_summarize_scalar_results(self, mock_logger: Mock) -> None:
        """Test complex results are rendered as short strings."""

        @log_verification
        def test_function(m: int) -> complex:
            return complex(1.5, -2.0)

        test_function(2)

        assert mock_logger.success.call_args[1]["extra"]["result"] == "1.5-2j"

    @patch("loguru.logger")
    def test_should_generate_unique_correlation_ids(self, mock_logger: Mock) -> None:
        """Test each call gets its own correlation ID."""

        @log_verification
        def test_function(n: int) -> int:
            return n

        test_function(1)
        test_function(2)

        first = mock_logger.debug.call_args_list[0][1]["extra"]["correlation_id"]
        second = mock_logger.debug.call_args_list[1][1]["extra"]["correlation_id"]
        assert first != second
        assert len(first) == 8

    @patch("loguru.logger")
    def test_should_work_when_decorators_combined(self, mock_logger: Mock) -> None:
        """Test validation runs inside logging and its failure is logged."""

        @log_verification
        @validate_inputs
        def test_function(N: int) -> int:
            return 2 * N

        assert test_function(4) == 8
        with pytest.raises(ValidationError):
            test_function(0)

        assert mock_logger.success.call_count == 1
        assert mock_logger.error.call_count == 1
