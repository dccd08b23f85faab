"""
Smooth compactly supported windows.

Both shapes are evaluated on the unscaled variable u = (x - shift) / scale.
The bump is exp(c (1 - 1/(1 - t^2))) with t = 2u - 3, so it peaks at 1 on
u = 3/2; the plateau window is 1 on [1, 2] with exp(-1/s) transition ramps.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np
import numpy.typing as npt
import sympy

from src.core.enums import WindowKind
from src.core.exceptions.verification import ValidationError
from src.core.utils.validation import validate_positive

# Highest derivative order with a recorded bound
DERIVATIVE_ORDER = 4

# Open grid used to take suprema of derivatives
DERIVATIVE_GRID = 4003


def _psi(s: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    out = np.zeros_like(s)
    positive = s > 0
    out[positive] = np.exp(-1.0 / s[positive])
    return out


def smooth_step(s: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """C-infinity step: 0 for s <= 0, 1 for s >= 1."""
    s = np.asarray(s, dtype=np.float64)
    rising, falling = _psi(s), _psi(1.0 - s)
    return rising / (rising + falling)


@dataclass(frozen=True)
class SmoothWindow:
    """A C-infinity window w(x) = base((x - shift) / scale).

    Attributes:
        kind: Shape of the unscaled window
        scale: Horizontal dilation
        shift: Horizontal translation
        sharpness: Bump exponent c; larger c gives faster Fourier decay
    """

    kind: WindowKind = WindowKind.BUMP_ON_1_2
    scale: float = 1.0
    shift: float = 0.0
    sharpness: float = 1.0

    def __post_init__(self) -> None:
        """Validate window parameters.

        Raises:
            ValidationError: If kind is not a WindowKind or scale and sharpness are not positive
        """
        if not isinstance(self.kind, WindowKind):
            raise ValidationError(f"kind must be WindowKind enum, got {type(self.kind).__name__}")
        validate_positive(self.scale, "scale")
        validate_positive(self.sharpness, "sharpness")

    @classmethod
    def on_interval(
        cls, low: float, high: float, kind: WindowKind = WindowKind.BUMP_ON_1_2, sharpness: float = 1.0
    ) -> "SmoothWindow":
        """Window whose support is exactly [low, high]."""
        unit_low, unit_high = kind.support
        scale = (high - low) / (unit_high - unit_low)
        return cls(kind=kind, scale=scale, shift=low - scale * unit_low, sharpness=sharpness)

    @property
    def support(self) -> tuple[float, float]:
        low, high = self.kind.support
        return (self.shift + self.scale * low, self.shift + self.scale * high)

    def base(self, u: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Unscaled window at u."""
        u = np.asarray(u, dtype=np.float64)
        if self.kind is WindowKind.BUMP_ON_1_2:
            t = 2.0 * u - 3.0
            inside = np.abs(t) < 1.0
            out = np.zeros_like(u)
            out[inside] = np.exp(self.sharpness * (1.0 - 1.0 / (1.0 - t[inside] ** 2)))
            return out

        rise = smooth_step(2.0 * u - 1.0)
        fall = smooth_step(3.0 - u)
        return np.where(u < 1.5, rise, fall)

    def __call__(self, x: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return self.base((np.asarray(x, dtype=np.float64) - self.shift) / self.scale)

    def _symbolic_pieces(self, u: sympy.Symbol) -> list[tuple[sympy.Expr, float, float]]:
        """Analytic pieces of the unscaled window with the open intervals they cover."""
        if self.kind is WindowKind.BUMP_ON_1_2:
            t = 2 * u - 3
            c = sympy.nsimplify(self.sharpness)
            return [(sympy.exp(c * (1 - 1 / (1 - t**2))), 1.0, 2.0)]

        def step(s: sympy.Expr) -> sympy.Expr:
            return sympy.exp(-1 / s) / (sympy.exp(-1 / s) + sympy.exp(-1 / (1 - s)))

        return [(step(2 * u - 1), 0.5, 1.0), (step(3 - u), 2.0, 3.0)]

    @cached_property
    def derivative_bounds(self) -> tuple[float, ...]:
        """sup |w^(j)| for j = 0..DERIVATIVE_ORDER, from symbolic derivatives."""
        u = sympy.Symbol("u", real=True)
        pieces = self._symbolic_pieces(u)
        bounds = []
        for j in range(DERIVATIVE_ORDER + 1):
            supremum = 1.0 if self.kind.has_plateau and j == 0 else 0.0
            for expression, low, high in pieces:
                derivative = sympy.lambdify(u, sympy.diff(expression, u, j), "numpy")
                grid = np.linspace(low, high, DERIVATIVE_GRID)[1:-1]
                with np.errstate(all="ignore"):
                    values = np.broadcast_to(np.asarray(derivative(grid), dtype=np.float64), grid.shape)
                supremum = max(supremum, float(np.max(np.abs(np.nan_to_num(values)))))
            bounds.append(supremum / self.scale**j)
        return tuple(bounds)

    def to_dict(self) -> dict[str, Any]:
        return {
            "window": self.kind.value,
            "scale": self.scale,
            "shift": self.shift,
            "sharpness": self.sharpness,
        }
