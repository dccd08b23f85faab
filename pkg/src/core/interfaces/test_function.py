"""
Test-function interfaces for summation formulas.
"""

from abc import ABC, abstractmethod

import numpy as np
import numpy.typing as npt

from src.core.constants import POISSON_GAUSSIAN_TOLERANCE


class PoissonTestFunction(ABC):
    """Abstract interface for a function with a computable Fourier transform.

    The Fourier transform convention is f_hat(y) = integral of f(x) e(-xy) dx.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Short label used in reports."""
        pass

    @property
    @abstractmethod
    def center(self) -> float:
        """Point around which f is concentrated."""
        pass

    @abstractmethod
    def value(self, x: npt.NDArray[np.float64]) -> npt.NDArray[np.complex128]:
        """Evaluate f at integer (or real) points."""
        pass

    @abstractmethod
    def fourier(self, y: npt.NDArray[np.float64]) -> npt.NDArray[np.complex128]:
        """Evaluate f_hat at integer (or real) frequencies."""
        pass

    @abstractmethod
    def value_radius(self) -> int:
        """Initial truncation radius of the sum of f around its center."""
        pass

    @abstractmethod
    def fourier_radius(self) -> int:
        """Initial truncation radius of the sum of f_hat around 0."""
        pass

    @property
    def default_tolerance(self) -> float:
        """Acceptance threshold on the relative error of the summation formula."""
        return POISSON_GAUSSIAN_TOLERANCE

    def params(self) -> dict[str, float | str]:
        """Parameters echoed in reports."""
        return {"function": self.name}
