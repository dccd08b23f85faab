"""
Poisson summation: sum f(n) = sum f_hat(m).

Both sides are truncated symmetric sums whose radius doubles until the
outer half of the window carries less than POISSON_TAIL_TOLERANCE.
"""

import time
from collections.abc import Callable
from math import ceil, log, pi, sqrt

import numpy as np
import numpy.typing as npt

from src.core.constants import (
    MAX_REFINEMENTS,
    MIN_PANELS,
    POISSON_MAX_RADIUS,
    POISSON_TAIL_TOLERANCE,
    POISSON_TERM_CUTOFF,
    POISSON_WINDOW_SCALE,
    POISSON_WINDOW_SHIFT,
    POISSON_WINDOW_TOLERANCE,
    WINDOW_FOURIER_TOLERANCE,
)
from src.core.exceptions.verification import NonConvergentError, QuadratureFailureError
from src.core.interfaces import PoissonTestFunction
from src.core.models.report import VerificationReport
from src.core.utils.decorators import log_verification
from src.core.utils.validation import validate_positive
from src.transforms.quadrature import gauss_legendre_grid
from src.transforms.windows import SmoothWindow

# exp(-pi u^2) < POISSON_TERM_CUTOFF beyond this u
GAUSSIAN_REACH = sqrt(log(1.0 / POISSON_TERM_CUTOFF) / pi)


class GaussianTestFunction(PoissonTestFunction):
    """f(x) = exp(-pi ((x - shift) / scale)^2), with a closed-form transform."""

    def __init__(self, scale: float = 1.0, shift: float = 0.0) -> None:
        self.scale = validate_positive(scale, "scale")
        self.shift = shift

    @property
    def name(self) -> str:
        return "gaussian"

    @property
    def center(self) -> float:
        return self.shift

    def value(self, x: npt.NDArray[np.float64]) -> npt.NDArray[np.complex128]:
        u = (np.asarray(x, dtype=np.float64) - self.shift) / self.scale
        return np.exp(-pi * u**2).astype(np.complex128)

    def fourier(self, y: npt.NDArray[np.float64]) -> npt.NDArray[np.complex128]:
        y = np.asarray(y, dtype=np.float64)
        envelope = self.scale * np.exp(-pi * (self.scale * y) ** 2)
        return envelope * np.exp(-2j * pi * self.shift * y)

    def value_radius(self) -> int:
        return ceil(GAUSSIAN_REACH * self.scale) + 1

    def fourier_radius(self) -> int:
        return ceil(GAUSSIAN_REACH / self.scale) + 1

    def params(self) -> dict[str, float | str]:
        return {"function": self.name, "scale": self.scale, "shift": self.shift}


class WindowTestFunction(PoissonTestFunction):
    """A smooth window whose Fourier transform is computed by quadrature."""

    def __init__(self, window: SmoothWindow | None = None) -> None:
        self.window = window or SmoothWindow(scale=POISSON_WINDOW_SCALE, shift=POISSON_WINDOW_SHIFT)

    @property
    def name(self) -> str:
        return self.window.kind.value

    @property
    def center(self) -> float:
        low, high = self.window.support
        return 0.5 * (low + high)

    @property
    def default_tolerance(self) -> float:
        return POISSON_WINDOW_TOLERANCE

    def value(self, x: npt.NDArray[np.float64]) -> npt.NDArray[np.complex128]:
        return self.window(x).astype(np.complex128)

    def _transform(self, y: npt.NDArray[np.float64], panels: int) -> npt.NDArray[np.complex128]:
        low, high = self.window.support
        x, w = gauss_legendre_grid(low, high, panels)
        return (w * self.window(x)) @ np.exp(-2j * pi * np.outer(x, y))

    def fourier(self, y: npt.NDArray[np.float64]) -> npt.NDArray[np.complex128]:
        """f_hat on every frequency at once, refined by panel doubling.

        Raises:
            QuadratureFailureError: If doubling never settles
        """
        y = np.atleast_1d(np.asarray(y, dtype=np.float64))
        low, high = self.window.support
        panels = ceil(float(np.max(np.abs(y))) * (high - low)) + MIN_PANELS
        tolerance = WINDOW_FOURIER_TOLERANCE * (high - low)

        coarse = self._transform(y, panels)
        error = np.inf
        for _ in range(MAX_REFINEMENTS):
            panels *= 2
            fine = self._transform(y, panels)
            error = float(np.max(np.abs(fine - coarse)))
            if error < tolerance:
                return fine
            coarse = fine
        raise QuadratureFailureError(error, tolerance, "window Fourier transform")

    def value_radius(self) -> int:
        low, high = self.window.support
        return ceil(high - low) + 1

    def fourier_radius(self) -> int:
        return 16

    def params(self) -> dict[str, float | str]:
        return {"function": self.name, **self.window.to_dict()}


def truncated_sum(
    evaluate: Callable[[npt.NDArray[np.float64]], npt.NDArray[np.complex128]],
    center: float,
    radius: int,
    tolerance: float = POISSON_TAIL_TOLERANCE,
) -> tuple[complex, int]:
    """Sum evaluate(n) over |n - center| <= radius, doubling radius until the tail is small.

    Returns:
        The sum (terms below POISSON_TERM_CUTOFF dropped) and the final radius

    Raises:
        NonConvergentError: If the radius passes POISSON_MAX_RADIUS
    """
    middle = round(center)
    while radius <= POISSON_MAX_RADIUS:
        n = np.arange(middle - radius, middle + radius + 1)
        terms = np.asarray(evaluate(n.astype(np.float64)), dtype=np.complex128)
        magnitudes = np.abs(terms)
        total = complex(np.sum(terms[magnitudes >= POISSON_TERM_CUTOFF]))
        tail = float(np.sum(magnitudes[np.abs(n - middle) > radius // 2]))
        if tail <= tolerance * max(1.0, abs(total)):
            return total, radius
        radius *= 2
    raise NonConvergentError(
        f"Tail mass stays above {tolerance:.1e} up to radius {POISSON_MAX_RADIUS}"
    )


@log_verification
def poisson_verify(f: PoissonTestFunction, tolerance: float | None = None) -> VerificationReport:
    """Compare sum f(n) with sum f_hat(m).

    Args:
        f: Test function with a computable transform
        tolerance: Relative tolerance; the function's default when None

    Returns:
        Report with lhs = sum f(n), rhs = sum f_hat(m)

    Raises:
        NonConvergentError: If either truncation does not converge
    """
    start = time.perf_counter()
    lhs, value_radius = truncated_sum(f.value, f.center, f.value_radius())
    rhs, fourier_radius = truncated_sum(f.fourier, 0.0, f.fourier_radius())
    return VerificationReport.compare(
        "poisson",
        lhs,
        rhs,
        tolerance if tolerance is not None else f.default_tolerance,
        params=f.params(),
        truncation={"value_radius": value_radius, "fourier_radius": fourier_radius},
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )
