"""
Composite Gauss-Legendre quadrature for oscillatory integrals.

The panel count follows the number of oscillations of the phase, so every
panel carries at most about one cycle of e(f) and NODES_PER_PANEL nodes.
The error estimate is the change under panel doubling.
"""

from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache
from math import ceil

import numpy as np
import numpy.typing as npt

from src.core.constants import (
    MAX_PHASE_SAMPLES,
    MAX_REFINEMENTS,
    MAX_SAMPLE_STEP_CYCLES,
    MIN_PANELS,
    NODES_PER_PANEL,
    PHASE_SAMPLES,
    QUADRATURE_TOLERANCE,
)
from src.core.exceptions.verification import QuadratureFailureError
from src.core.utils.validation import validate_interval

RealFunction = Callable[[npt.NDArray[np.float64]], npt.ArrayLike]


@dataclass(frozen=True)
class QuadratureResult:
    """Integral value with its doubling error estimate and final node count."""

    value: complex
    error_estimate: float
    nodes: int


@lru_cache(maxsize=16)
def gauss_legendre_rule(n: int) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Nodes and weights of the n-point rule on [-1, 1], read-only."""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre_grid(
    a: float, b: float, panels: int, nodes_per_panel: int = NODES_PER_PANEL
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Flattened composite rule on [a, b] with equal panels."""
    nodes, weights = gauss_legendre_rule(nodes_per_panel)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    return x, w


def sample(func: RealFunction, x: npt.NDArray[np.float64]) -> npt.NDArray[np.generic]:
    """Evaluate func on x, broadcasting constant returns."""
    return np.broadcast_to(np.asarray(func(x)), x.shape)


def sign_changes(values: npt.NDArray[np.float64]) -> int:
    """Number of strict sign changes, ignoring exact zeros."""
    signs = np.sign(values)
    signs = signs[signs != 0]
    return int(np.count_nonzero(np.diff(signs)))


def resolve_phase(
    f: RealFunction, a: float, b: float
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Sample f finely enough that it moves less than a quarter cycle per step."""
    samples = PHASE_SAMPLES
    while True:
        x = np.linspace(a, b, samples)
        phase = np.asarray(sample(f, x), dtype=np.float64)
        if np.max(np.abs(np.diff(phase))) <= MAX_SAMPLE_STEP_CYCLES or samples >= MAX_PHASE_SAMPLES:
            return x, phase
        samples = 2 * samples - 1


def count_panels(g: RealFunction, f: RealFunction, a: float, b: float) -> tuple[int, float]:
    """Panel count from phase variation and amplitude sign changes, and max |g|."""
    x, phase = resolve_phase(f, a, b)
    amplitude = np.asarray(sample(g, x), dtype=np.complex128)
    variation = float(np.sum(np.abs(np.diff(phase))))
    wiggles = sign_changes(amplitude.real) + sign_changes(amplitude.imag)
    panels = ceil(variation + 0.5 * wiggles) + MIN_PANELS
    return panels, float(np.max(np.abs(amplitude)))


def composite_integral(
    integrand: Callable[[npt.NDArray[np.float64]], npt.NDArray[np.generic]],
    a: float,
    b: float,
    panels: int,
) -> complex:
    x, w = gauss_legendre_grid(a, b, panels)
    return complex(np.dot(w, integrand(x)))


def oscillatory_quadrature(
    g: RealFunction,
    f: RealFunction,
    a: float,
    b: float,
    panels: int | None = None,
    tolerance: float = QUADRATURE_TOLERANCE,
) -> QuadratureResult:
    """Integral of g(x) e(f(x)) over [a, b].

    Args:
        g: Amplitude, vectorised
        f: Real phase in cycles, vectorised
        a: Lower limit
        b: Upper limit
        panels: Starting panel count; derived from the phase when None
        tolerance: Relative tolerance, scaled by (b - a) max|g|

    Returns:
        QuadratureResult from the finest run

    Raises:
        QuadratureFailureError: If MAX_REFINEMENTS doublings do not meet the tolerance
    """
    validate_interval(a, b)
    estimated_panels, amplitude = count_panels(g, f, a, b)
    if amplitude == 0.0:
        return QuadratureResult(0j, 0.0, 0)
    panels = estimated_panels if panels is None else panels
    absolute_tolerance = tolerance * (b - a) * amplitude

    def integrand(x: npt.NDArray[np.float64]) -> npt.NDArray[np.complex128]:
        phase = np.asarray(sample(f, x), dtype=np.float64)
        return sample(g, x) * np.exp(2j * np.pi * phase)

    coarse = composite_integral(integrand, a, b, panels)
    error = np.inf
    for _ in range(MAX_REFINEMENTS):
        panels *= 2
        fine = composite_integral(integrand, a, b, panels)
        error = abs(fine - coarse)
        if error < absolute_tolerance:
            return QuadratureResult(fine, error, panels * NODES_PER_PANEL)
        coarse = fine
    raise QuadratureFailureError(error, absolute_tolerance, "oscillatory quadrature")
