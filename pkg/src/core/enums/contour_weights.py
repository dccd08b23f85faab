"""
Contour weight enumerations.

The approximate functional equation weights its Mellin integral by an even
function G with G(0) = 1. The choice of G changes how fast the cutoff V
decays and therefore how many coefficients the two sums need.
"""

from enum import StrEnum

import numpy as np
import numpy.typing as npt


class ContourWeight(StrEnum):
    """Even weights G(u) with G(0) = 1 for the cutoff V_s."""

    EXP_SQUARE = "exp_square"  # G(u) = exp(u^2), log-normal tail in y
    SECANT = "secant"  # G(u) = 1 / cos(pi u / 8), poles at u = +-4
    UNIT = "unit"  # G(u) = 1, V is the normalized incomplete Gamma function

    def evaluate(self, u: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
        """
        Evaluate G on complex points.

        Args:
            u: Points on a vertical contour

        Returns:
            G(u) at every point
        """
        if self is ContourWeight.EXP_SQUARE:
            return np.exp(u * u)
        if self is ContourWeight.SECANT:
            return 1.0 / np.cos(np.pi * u / 8.0)
        return np.ones_like(u)

    @property
    def pole_abscissa(self) -> float | None:
        """Smallest |Re u| of a pole of G, or None when G is entire."""
        if self is ContourWeight.SECANT:
            return 4.0
        return None

    @classmethod
    def from_string(cls, value: str) -> "ContourWeight":
        """
        Convert string to ContourWeight enum.

        Raises:
            ValueError: If the weight is not supported
        """
        value_lower = value.lower()
        for weight in cls:
            if weight.value == value_lower:
                return weight

        raise ValueError(
            f"Unsupported contour weight: {value}. "
            f"Supported weights: {', '.join(w.value for w in cls)}"
        )
