"""
Parameter objects for the delta expansion and the approximate functional equation.
"""

from dataclasses import dataclass
from typing import Any

from src.core.constants import AFE_CONTOUR_SHIFT
from src.core.enums import ContourWeight


@dataclass(frozen=True)
class DeltaConfig:
    """Circle-method parameters for one evaluation of the delta expansion.

    quadrature_nodes = 0 selects the closed-form x-integral; a positive value
    integrates x over [0, 1] with that many Gauss-Legendre nodes instead.
    """

    n: int
    Q: float
    quadrature_nodes: int = 0

    def __post_init__(self) -> None:
        """Validate configuration after initialization.

        Raises:
            TypeError: If n is not an integer
            ValueError: If Q < 1 or quadrature_nodes < 0
        """
        if not isinstance(self.n, int):
            raise TypeError(f"n must be int, got {type(self.n).__name__}")
        if not self.is_valid_q():
            raise ValueError(f"Invalid Q: {self.Q}. Must be at least 1.")
        if self.quadrature_nodes < 0:
            raise ValueError(f"quadrature_nodes must be non-negative, got {self.quadrature_nodes}")

    def is_valid_q(self) -> bool:
        """Validate Q >= 1."""
        return self.Q >= 1

    @property
    def closed_form(self) -> bool:
        """Check if the x-integral is evaluated in closed form."""
        return self.quadrature_nodes == 0

    def to_dict(self) -> dict[str, Any]:
        """Convert config to dictionary."""
        return {"n": self.n, "Q": self.Q, "quadrature_nodes": self.quadrature_nodes}


@dataclass(frozen=True)
class AfeConfig:
    """Approximate functional equation parameters.

    truncation = None lets central_value size both sums from the conductor.
    """

    G: ContourWeight = ContourWeight.EXP_SQUARE
    X: float = 1.0
    sigma: float = AFE_CONTOUR_SHIFT
    truncation: int | None = None

    def __post_init__(self) -> None:
        """Validate configuration after initialization.

        Raises:
            TypeError: If G is not a ContourWeight
            ValueError: If X, sigma or truncation are out of range
        """
        if not isinstance(self.G, ContourWeight):
            raise TypeError(f"G must be ContourWeight enum, got {type(self.G).__name__}")
        if self.X <= 0:
            raise ValueError(f"Invalid balance parameter X: {self.X}. Must be positive.")
        if not self.is_valid_sigma():
            raise ValueError(f"Invalid contour abscissa: {self.sigma}. Must lie in (0, 4).")
        if self.truncation is not None and self.truncation < 1:
            raise ValueError(f"truncation must be positive, got {self.truncation}")

    def is_valid_sigma(self) -> bool:
        """The contour must stay right of 0 and left of the first pole of G."""
        return 0 < self.sigma < 4

    def to_dict(self) -> dict[str, Any]:
        """Convert config to dictionary."""
        return {
            "G": self.G.value,
            "X": self.X,
            "sigma": self.sigma,
            "truncation": self.truncation,
        }
