"""
Character sum result model.
"""

from dataclasses import dataclass, field
from typing import Any

from src.core.constants import CHARSUM_TOLERANCE


@dataclass(frozen=True)
class CharSumResult:
    """Value of a complete character sum with its closed form or bound.

    When closed_form is present, value and closed_form agree to
    CHARSUM_TOLERANCE. When bound is present, satisfied records |value| <= bound
    (plus the rounding allowance recorded by the producer).
    """

    value: complex
    modulus: int
    closed_form: complex | None = None
    bound: float | None = None
    satisfied: bool = True
    notes: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")

    @property
    def discrepancy(self) -> float | None:
        """|value - closed_form|, or None without a closed form."""
        if self.closed_form is None:
            return None
        return abs(self.value - self.closed_form)

    def matches_closed_form(self, tolerance: float = CHARSUM_TOLERANCE) -> bool:
        """Check the brute-force value against the closed form."""
        discrepancy = self.discrepancy
        return discrepancy is not None and discrepancy < tolerance

    def to_dict(self) -> dict[str, Any]:
        """Convert result to a CSV-friendly dictionary."""
        row: dict[str, Any] = {
            "modulus": self.modulus,
            "re_value": self.value.real,
            "im_value": self.value.imag,
            "abs_value": abs(self.value),
            "bound": self.bound,
            "satisfied": self.satisfied,
        }
        if self.closed_form is not None:
            row["re_closed_form"] = self.closed_form.real
            row["im_closed_form"] = self.closed_form.imag
        return row
