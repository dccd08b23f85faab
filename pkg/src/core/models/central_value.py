"""
Central value model.
"""

from dataclasses import dataclass, field
from typing import Any

from src.core.constants import AFE_RESIDUAL_TOLERANCE


@dataclass(frozen=True)
class CentralValue:
    """L(f x chi, 1/2) with the data that produced it.

    root_number_unit is epsilon / (i^k tau_chi^2 / P); it is snapped to an
    exact fourth root of unity when within tolerance.
    """

    value: complex
    conductor: int
    afe_residual: float
    root_number: complex = 1 + 0j
    root_number_unit: complex = 1 + 0j
    truncation: int = 0
    character: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.conductor < 1:
            raise ValueError(f"conductor must be positive, got {self.conductor}")
        if self.afe_residual < 0:
            raise ValueError(f"afe_residual must be non-negative, got {self.afe_residual}")

    @property
    def is_accepted(self) -> bool:
        """Check the self-consistency residual."""
        return self.afe_residual < AFE_RESIDUAL_TOLERANCE

    @property
    def abs_value(self) -> float:
        return abs(self.value)

    def to_dict(self) -> dict[str, Any]:
        """Convert central value to dictionary."""
        return {
            "re_L": self.value.real,
            "im_L": self.value.imag,
            "abs_L": abs(self.value),
            "conductor": self.conductor,
            "afe_residual": self.afe_residual,
            "re_root_number": self.root_number.real,
            "im_root_number": self.root_number.imag,
            "truncation": self.truncation,
        }
