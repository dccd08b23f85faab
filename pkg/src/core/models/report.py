"""
Verification report model.

One report per checked identity or bound: both sides, the discrepancy, the
truncation parameters that produced them and the wall-clock cost.
"""

import json
from dataclasses import dataclass, field
from typing import Any

from src.core.constants import RELATIVE_ERROR_FLOOR
from src.core.enums import CheckKind
from src.core.types.numeric import relative_error


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a single identity or bound check."""

    identity: str
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    tolerance: float
    passed: bool
    check: CheckKind = CheckKind.RELATIVE
    params: dict[str, Any] = field(default_factory=dict)
    truncation: dict[str, Any] = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def __post_init__(self) -> None:
        """Validate report fields.

        Raises:
            TypeError: If check is not a CheckKind
            ValueError: If errors or tolerance are negative
        """
        if not isinstance(self.check, CheckKind):
            raise TypeError(f"check must be CheckKind enum, got {type(self.check).__name__}")
        if self.abs_err < 0 or self.rel_err < 0:
            raise ValueError(f"Errors must be non-negative, got {self.abs_err}, {self.rel_err}")
        if self.tolerance < 0:
            raise ValueError(f"tolerance must be non-negative, got {self.tolerance}")

    @classmethod
    def compare(
        cls,
        identity: str,
        lhs: complex,
        rhs: complex,
        tolerance: float,
        check: CheckKind = CheckKind.RELATIVE,
        params: dict[str, Any] | None = None,
        truncation: dict[str, Any] | None = None,
        elapsed_ms: float = 0.0,
    ) -> "VerificationReport":
        """Build a report for an identity lhs = rhs.

        Args:
            identity: Name of the identity
            lhs: Left-hand side
            rhs: Right-hand side
            tolerance: Acceptance threshold on rel_err or abs_err
            check: RELATIVE or ABSOLUTE acceptance
            params: Parameters of the case
            truncation: Truncation metadata
            elapsed_ms: Runtime of the case

        Returns:
            The report, with passed decided by the check kind
        """
        lhs, rhs = complex(lhs), complex(rhs)
        abs_err = abs(lhs - rhs)
        rel_err = relative_error(lhs, rhs, RELATIVE_ERROR_FLOOR)
        measured = abs_err if check is CheckKind.ABSOLUTE else rel_err
        return cls(
            identity=identity,
            lhs=lhs,
            rhs=rhs,
            abs_err=abs_err,
            rel_err=rel_err,
            tolerance=tolerance,
            passed=bool(measured < tolerance),
            check=check,
            params=params or {},
            truncation=truncation or {},
            elapsed_ms=elapsed_ms,
        )

    @classmethod
    def bound(
        cls,
        identity: str,
        value: complex | float,
        bound: float,
        params: dict[str, Any] | None = None,
        truncation: dict[str, Any] | None = None,
        elapsed_ms: float = 0.0,
        passed: bool | None = None,
        check: CheckKind = CheckKind.BOUND,
    ) -> "VerificationReport":
        """Build a report for a bound |value| <= bound.

        The rhs holds the bound; abs_err is the excess over it (0 when within).
        """
        magnitude = abs(value)
        excess = max(0.0, magnitude - bound)
        return cls(
            identity=identity,
            lhs=complex(value),
            rhs=complex(bound),
            abs_err=excess,
            rel_err=excess / max(bound, RELATIVE_ERROR_FLOOR),
            tolerance=0.0,
            passed=bool(magnitude <= bound) if passed is None else passed,
            check=check,
            params=params or {},
            truncation=truncation or {},
            elapsed_ms=elapsed_ms,
        )

    def to_row(self) -> dict[str, Any]:
        """Flatten to one CSV row."""
        return {
            "identity": self.identity,
            "params": json.dumps(self.params, sort_keys=True, default=str),
            "lhs_re": self.lhs.real,
            "lhs_im": self.lhs.imag,
            "rhs_re": self.rhs.real,
            "rhs_im": self.rhs.imag,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "passed": self.passed,
            "time_ms": round(self.elapsed_ms, 3),
        }
