"""
Smooth window enumerations.

This module defines the compactly supported test functions used by the
dyadic sums, Poisson and Voronoi checks.
"""

from enum import StrEnum


class WindowKind(StrEnum):
    """
    Shapes of smooth compactly supported windows.

    Both are C-infinity and vanish to infinite order at the support edges.
    """

    BUMP_ON_1_2 = "bump_on_1_2"  # exp(c (1 - 1/(1 - t^2))), t = 2u - 3
    PLATEAU_HALF_3 = "plateau_half_3"  # 1 on [1, 2], smooth ramps on [1/2, 1] and [2, 3]

    @property
    def support(self) -> tuple[float, float]:
        """Support of the unscaled window."""
        if self is WindowKind.BUMP_ON_1_2:
            return (1.0, 2.0)
        return (0.5, 3.0)

    @property
    def has_plateau(self) -> bool:
        """Check if the window is identically 1 on [1, 2]."""
        return self is WindowKind.PLATEAU_HALF_3

    @classmethod
    def from_string(cls, value: str) -> "WindowKind":
        """
        Convert string to WindowKind enum.

        Args:
            value: String representation of the window

        Returns:
            Corresponding WindowKind enum value

        Raises:
            ValueError: If the window is not supported
        """
        value_lower = value.lower()
        for kind in cls:
            if kind.value == value_lower:
                return kind

        raise ValueError(
            f"Unsupported window: {value}. Supported windows: {', '.join(k.value for k in cls)}"
        )
