"""
Core type definitions and protocols.

This module defines shared protocols so transforms, character sums and
central values can accept any coefficient source or vectorised function
without importing each other's concrete classes.
"""

from typing import Protocol

import numpy as np
import numpy.typing as npt


class ArrayFunction(Protocol):
    """A real or complex function evaluated elementwise on numpy arrays."""

    def __call__(self, x: npt.NDArray[np.float64]) -> npt.NDArray[np.generic]:
        """Evaluate the function at every point of x."""
        ...


class PhaseFamily(Protocol):
    """A family of phases f_B(x) indexed by a frequency scale B."""

    def __call__(self, x: npt.NDArray[np.float64], scale: float) -> npt.NDArray[np.float64]:
        """Evaluate f_scale at every point of x."""
        ...


class CoefficientSource(Protocol):
    """Protocol for providers of normalized Hecke eigenvalues.

    Breaks the dependency between the transforms / L-value modules and the
    concrete CuspForm implementation.
    """

    weight: int

    @property
    def cache_bound(self) -> int:
        """Largest n with a cached coefficient."""
        ...

    def normalized_table(self, N: int) -> npt.NDArray[np.float64]:
        """Array of length N + 1 whose entry n is lambda(n) (entry 0 is 0)."""
        ...
