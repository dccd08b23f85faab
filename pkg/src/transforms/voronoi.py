"""
Holomorphic Voronoi summation for level-one eigenforms.

    sum lambda(n) e(an/q) h(n) = (2 pi i^k / q) sum lambda(n) e(-a_bar n/q) H(n/q^2)

with H(y) = integral of h(x) J_{k-1}(4 pi sqrt(xy)) dx. H is tabulated on a
shared Gauss-Legendre grid; Bessel values come from scipy.special.jv.
"""

import time
from functools import lru_cache
from math import ceil, floor, gcd, pi, sqrt

import numpy as np
import numpy.typing as npt
from loguru import logger
from scipy.special import jv

from src.core.constants import (
    BESSEL_CHECK_STRIDE,
    BESSEL_CHUNK,
    BESSEL_QUADRATURE_TOLERANCE,
    DECAY_WINDOW_SHARPNESS,
    J_BOUND_CONSTANT,
    MAX_REFINEMENTS,
    MIN_PANELS,
    RELATIVE_ERROR_FLOOR,
    VORONOI_DOUBLING_TOLERANCE,
    VORONOI_TOLERANCE,
    VORONOI_TRUNCATION_CONSTANT,
    VORONOI_TRUNCATION_QUADRATIC,
)
from src.core.exceptions.verification import (
    PreconditionViolatedError,
    QuadratureFailureError,
    TruncationInsufficientError,
)
from src.core.models.report import VerificationReport
from src.core.protocols import CoefficientSource
from src.core.types.numeric import exact_phase, i_power
from src.core.utils.decorators import log_verification, validate_inputs
from src.core.utils.validation import validate_odd_prime, validate_positive_int
from src.numtheory.modarith import inverse_or_zero
from src.transforms.quadrature import gauss_legendre_grid, oscillatory_quadrature
from src.transforms.windows import SmoothWindow


def voronoi_window(X: float, sharpness: float = DECAY_WINDOW_SHARPNESS) -> SmoothWindow:
    """Bump supported on [X, 2X]."""
    return SmoothWindow.on_interval(X, 2 * X, sharpness=sharpness)


def default_truncation(q: int, X: float) -> int:
    """T = ceil(100 q^2 / X + 50 q^2)."""
    return ceil(VORONOI_TRUNCATION_CONSTANT * q * q / X + VORONOI_TRUNCATION_QUADRATIC * q * q)


def bessel_panels(h: SmoothWindow, y_max: float) -> int:
    """Panels covering the oscillations of J_{k-1}(4 pi sqrt(x y_max)) on the support."""
    low, high = h.support
    cycles = 2.0 * sqrt(y_max) * (sqrt(high) - sqrt(low))
    return ceil(cycles) + MIN_PANELS


def _transform_block(
    h: SmoothWindow, ys: npt.NDArray[np.float64], weight: int, panels: int
) -> npt.NDArray[np.float64]:
    low, high = h.support
    x, w = gauss_legendre_grid(low, high, panels)
    weights = w * h(x)
    out = np.empty(len(ys), dtype=np.float64)
    for start in range(0, len(ys), BESSEL_CHUNK):
        block = ys[start : start + BESSEL_CHUNK]
        kernel = jv(weight - 1, 4.0 * pi * np.sqrt(np.outer(block, x)))
        out[start : start + BESSEL_CHUNK] = kernel @ weights
    return out


def bessel_transform_table(
    h: SmoothWindow, ys: npt.ArrayLike, weight: int = 12
) -> npt.NDArray[np.float64]:
    """H(y) for every y on one quadrature grid.

    Every BESSEL_CHECK_STRIDE-th argument, and the largest, is re-evaluated at
    twice the panel count; the grid doubles until they agree.

    Raises:
        QuadratureFailureError: If agreement within 1e-8 of the integral scale is never reached
    """
    ys = np.atleast_1d(np.asarray(ys, dtype=np.float64))
    low, high = h.support
    x, w = gauss_legendre_grid(low, high, MIN_PANELS)
    tolerance = BESSEL_QUADRATURE_TOLERANCE * float(np.dot(w, np.abs(h(x))))
    check = np.unique(np.append(np.arange(0, len(ys), BESSEL_CHECK_STRIDE), np.argmax(ys)))

    panels = bessel_panels(h, float(np.max(ys)))
    error = np.inf
    for _ in range(MAX_REFINEMENTS):
        table = _transform_block(h, ys, weight, panels)
        reference = _transform_block(h, ys[check], weight, 2 * panels)
        error = float(np.max(np.abs(reference - table[check])))
        if error < tolerance:
            return table
        panels *= 2
    raise QuadratureFailureError(error, tolerance, "Bessel transform")


@validate_inputs
def bessel_transform_H(h: SmoothWindow, y: float, k: int = 12) -> float:
    """H(y) = integral of h(x) J_{k-1}(4 pi sqrt(xy)) dx.

    Raises:
        ValidationError: If y <= 0
        QuadratureFailureError: If the quadrature does not settle
    """
    return float(bessel_transform_table(h, [y], k)[0])


@lru_cache(maxsize=64)
def _dual_table(h: SmoothWindow, q: int, weight: int, count: int) -> npt.NDArray[np.float64]:
    """H(m / q^2) for m in [1, count], shared by every a modulo q."""
    table = bessel_transform_table(h, np.arange(1, count + 1) / (q * q), weight)
    table.setflags(write=False)
    return table


@log_verification
def voronoi_verify(
    form: CoefficientSource,
    a: int,
    q: int,
    window: SmoothWindow,
    truncation: int | None = None,
) -> VerificationReport:
    """Check the Voronoi identity for e(an/q) twisted by a window.

    Args:
        form: Coefficient source with weight k
        a: Numerator, coprime to q
        q: Positive modulus
        window: Test function h supported in [X, 2X]
        truncation: Dual sum length T; ceil(100 q^2 / X + 50 q^2) when None

    Returns:
        Report comparing the window sum with the dual sum at n <= T

    Raises:
        PreconditionViolatedError: If gcd(a, q) > 1
        SizeLimitError: If the coefficient cache does not cover 2T
        TruncationInsufficientError: If doubling T moves the dual sum by more than 1e-8 |lhs|
    """
    start = time.perf_counter()
    validate_positive_int(q, "q")
    if gcd(a, q) != 1:
        raise PreconditionViolatedError("voronoi_verify", f"gcd({a}, {q}) > 1")
    a %= q
    low, high = window.support
    T = truncation if truncation is not None else default_truncation(q, low)
    coefficients = form.normalized_table(max(2 * T, floor(high)))

    n = np.arange(max(1, ceil(low)), floor(high) + 1)
    lhs = complex(np.sum(coefficients[n] * exact_phase(a * n, q) * window(n)))

    a_bar = inverse_or_zero(a, q)
    m = np.arange(1, 2 * T + 1)
    dual = _dual_table(window, q, form.weight, 2 * T)
    terms = coefficients[m] * exact_phase(-a_bar * m, q) * dual
    prefactor = 2 * pi * i_power(form.weight) / q
    rhs = prefactor * complex(np.sum(terms[:T]))
    rhs_doubled = prefactor * complex(np.sum(terms))

    movement = abs(rhs_doubled - rhs)
    allowed = VORONOI_DOUBLING_TOLERANCE * max(abs(lhs), RELATIVE_ERROR_FLOOR)
    if movement > allowed:
        raise TruncationInsufficientError(movement, allowed, T)

    return VerificationReport.compare(
        "voronoi",
        lhs,
        rhs,
        VORONOI_TOLERANCE,
        params={"a": a, "q": q, "X": low, "weight": form.weight, **window.to_dict()},
        truncation={"T": T, "doubling_movement": movement},
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def kernel_integral_J(
    n: int, N: int, q: int, ell: int, p: int, x: float | None = None, weight: int = 12
) -> complex:
    """Integral over [1, 2] of V(y) e(-N x y / (p^l a q)) J_{k-1}(4 pi sqrt(nNy) / (p^l q)) dy.

    V is the sharpness-6 bump on [1, 2], Q = sqrt(N / p^l), a = floor(Q) + 1 and
    x defaults to q / Q.
    """
    modulus = p**ell * q
    Q = sqrt(N / p**ell)
    a = floor(Q) + 1
    x = q / Q if x is None else x
    window = SmoothWindow(sharpness=DECAY_WINDOW_SHARPNESS)
    frequency = N * x / (p**ell * a * q)

    def amplitude(y: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        return window(y) * jv(weight - 1, 4.0 * pi * np.sqrt(n * N * y) / modulus)

    def phase(y: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        return -frequency * y

    return oscillatory_quadrature(amplitude, phase, 1.0, 2.0).value


@log_verification
def voronoi_J_bound_check(
    n: int,
    N: int,
    q: int,
    ell: int,
    p: int,
    x: float | None = None,
    weight: int = 12,
    constant: float = J_BOUND_CONSTANT,
) -> VerificationReport:
    """Check |J| <= C p^l q / sqrt(nN) with a fixed constant C.

    Raises:
        QuadratureFailureError: If the kernel integral does not settle
    """
    start = time.perf_counter()
    validate_odd_prime(p)
    for value, name in ((n, "n"), (N, "N"), (q, "q")):
        validate_positive_int(value, name)
    value = kernel_integral_J(n, N, q, ell, p, x, weight)
    bound = constant * p**ell * q / sqrt(n * N)
    logger.debug(f"|J| = {abs(value):.3e} against bound {bound:.3e}")
    return VerificationReport.bound(
        "voronoi_J_bound",
        value,
        bound,
        params={"n": n, "N": N, "q": q, "ell": ell, "p": p, "x": x, "C": constant},
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )
