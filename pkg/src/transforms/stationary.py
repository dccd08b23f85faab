"""
Stationary and non-stationary phase estimates for integrals of g(x) e(f(x)).
"""

import time
from collections.abc import Callable
from dataclasses import dataclass
from math import log10, sqrt
from typing import Any

import numpy as np
import numpy.typing as npt
import sympy
from loguru import logger
from scipy.optimize import brentq

from src.core.constants import (
    DECAY_NOISE_FLOOR,
    DECAY_SLACK,
    NONSTATIONARY_OCTAVE_SAMPLES,
    NONSTATIONARY_OCTAVES,
    STATIONARY_SAMPLES,
    STATIONARY_DECAY_RATIO,
)
from src.core.enums import CheckKind
from src.core.exceptions.verification import MultipleStationaryPointsError, NoStationaryPointError
from src.core.models.report import VerificationReport
from src.core.protocols import PhaseFamily
from src.core.types.numeric import e
from src.core.utils.decorators import log_verification
from src.core.utils.validation import validate_interval, validate_positive
from src.transforms.quadrature import RealFunction, oscillatory_quadrature, sample
from src.transforms.windows import SmoothWindow

ArrayMap = Callable[[npt.NDArray[np.float64]], npt.NDArray[np.float64]]


@dataclass(frozen=True)
class PhaseFunction:
    """A phase f with its first two derivatives, all vectorised."""

    value: ArrayMap
    first: ArrayMap
    second: ArrayMap

    @classmethod
    def from_expression(cls, expression: sympy.Expr, symbol: sympy.Symbol) -> "PhaseFunction":
        """Lambdify f, f' and f'' from a sympy expression in symbol."""

        def compile_(expr: sympy.Expr) -> ArrayMap:
            compiled = sympy.lambdify(symbol, expr, "numpy")
            return lambda x: np.asarray(sample(compiled, np.asarray(x, dtype=np.float64)), dtype=np.float64)

        return cls(
            value=compile_(expression),
            first=compile_(sympy.diff(expression, symbol)),
            second=compile_(sympy.diff(expression, symbol, 2)),
        )

    def __call__(self, x: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        return self.value(x)


@dataclass(frozen=True)
class StationaryPhaseEstimate:
    """Leading term of a stationary phase integral and its error budget."""

    main_term: complex
    error_budget: float
    stationary_point: float
    second_derivative: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "re_main": self.main_term.real,
            "im_main": self.main_term.imag,
            "error_budget": self.error_budget,
            "x0": self.stationary_point,
            "f2": self.second_derivative,
        }


def stationary_points(first_derivative: ArrayMap, a: float, b: float) -> list[float]:
    """Interior zeros of f' located by sign changes on a fine grid and refined by brentq."""
    x = np.linspace(a, b, STATIONARY_SAMPLES)
    values = first_derivative(x)
    points = [float(x[i]) for i in range(1, len(x) - 1) if values[i] == 0.0]
    for i in np.nonzero(values[:-1] * values[1:] < 0)[0]:
        points.append(float(brentq(lambda t: float(first_derivative(np.array([t]))[0]), x[i], x[i + 1])))
    return sorted(points)


def stationary_phase_main_term(
    g: RealFunction,
    phase: PhaseFunction,
    a: float,
    b: float,
    theta_f: float,
    omega_f: float,
    omega_g: float,
) -> StationaryPhaseEstimate:
    """g(x0) e(f(x0) + sgn(f''(x0))/8) / sqrt|f''(x0)| with its error budget.

    The budget is Omega_f^4 / (Theta_f^2 kappa^3) + Omega_f / Theta_f^1.5
    + Omega_f^3 / (Theta_f^1.5 Omega_g^2), kappa the distance from x0 to the
    nearer endpoint.

    Raises:
        NoStationaryPointError: If f' does not vanish inside (a, b)
        MultipleStationaryPointsError: If f' vanishes more than once
    """
    validate_interval(a, b)
    points = stationary_points(phase.first, a, b)
    if not points:
        raise NoStationaryPointError(f"f' does not change sign on [{a}, {b}]")
    if len(points) > 1:
        raise MultipleStationaryPointsError(len(points))

    x0 = points[0]
    at = np.array([x0])
    f2 = float(phase.second(at)[0])
    amplitude = complex(np.asarray(sample(g, at))[0])
    main = amplitude * complex(e(float(phase(at)[0]) + np.sign(f2) / 8)) / sqrt(abs(f2))

    kappa = min(b - x0, x0 - a)
    budget = (
        omega_f**4 / (theta_f**2 * kappa**3)
        + omega_f / theta_f**1.5
        + omega_f**3 / (theta_f**1.5 * omega_g**2)
    )
    return StationaryPhaseEstimate(main, budget, x0, f2)


def quadratic_phase_family(T: float) -> tuple[SmoothWindow, PhaseFunction, dict[str, float]]:
    """Bump on [1, 2] with f(x) = T (x - 3/2)^2 and its parameters Theta_f = T, Omega_f = 1, Omega_g = 0.35."""
    x = sympy.Symbol("x", real=True)
    phase = PhaseFunction.from_expression(sympy.Float(T) * (x - sympy.Rational(3, 2)) ** 2, x)
    return SmoothWindow(), phase, {"theta_f": T, "omega_f": 1.0, "omega_g": 0.35}


@log_verification
def stationary_phase_verify(T: float) -> VerificationReport:
    """Compare the stationary phase main term with quadrature on the quadratic family."""
    start = time.perf_counter()
    validate_positive(T, "T")
    window, phase, bounds = quadratic_phase_family(T)
    a, b = window.support
    estimate = stationary_phase_main_term(window, phase, a, b, **bounds)
    reference = oscillatory_quadrature(window, phase, a, b).value
    discrepancy = abs(reference - estimate.main_term)
    return VerificationReport.bound(
        "stationary_phase",
        discrepancy,
        estimate.error_budget,
        params={"T": T, "relative_discrepancy": discrepancy / abs(reference), **bounds},
        truncation=estimate.to_dict(),
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def stationary_phase_decay(low: VerificationReport, high: VerificationReport) -> VerificationReport:
    """Check the relative discrepancy shrinks by STATIONARY_DECAY_RATIO per decade of T.

    Args:
        low: stationary_phase_verify report at the smaller T
        high: stationary_phase_verify report at the larger T
    """
    T_low, T_high = low.params["T"], high.params["T"]
    validate_positive(T_high - T_low, "T_high - T_low")
    required = STATIONARY_DECAY_RATIO ** log10(T_high / T_low)
    ratio = low.params["relative_discrepancy"] / max(
        high.params["relative_discrepancy"], DECAY_NOISE_FLOOR
    )
    shortfall = max(0.0, required - ratio)
    return VerificationReport(
        identity="stationary_phase_decay",
        lhs=complex(ratio),
        rhs=complex(required),
        abs_err=shortfall,
        rel_err=shortfall / required,
        tolerance=0.0,
        passed=ratio >= required,
        check=CheckKind.DECAY,
        params={"T_low": T_low, "T_high": T_high},
        elapsed_ms=low.elapsed_ms + high.elapsed_ms,
    )


def _min_abs_derivative(phase_family: PhaseFamily, scale: float, a: float, b: float) -> float:
    x = np.linspace(a, b, STATIONARY_SAMPLES)
    return float(np.min(np.abs(np.gradient(phase_family(x, scale), x))))


@log_verification
def nonstationary_bound_check(
    g: RealFunction,
    phase_family: PhaseFamily,
    a: float,
    b: float,
    B: float,
    j: int,
    C_j: float | None = None,
) -> VerificationReport:
    """Check |I(B')| <= C_j B'^-j over the octaves of B and the 2^-j decay between them.

    The envelope of each octave [2^i B, 2^(i+1) B) is the largest |I| over
    NONSTATIONARY_OCTAVE_SAMPLES phase scales. Every envelope must stay below
    C_j (2^i B)^-j, and successive envelopes must shrink by 2^-j (with
    DECAY_SLACK), unless they sit at the noise floor. Without C_j the constant
    is calibrated on the first octave. A phase with min |f'| < B is reported as
    failed, not raised.

    Args:
        g: Amplitude
        phase_family: f(x, scale)
        a: Left end
        b: Right end
        B: Smallest phase scale
        j: Decay order
        C_j: Constant of the bound, calibrated at B when None

    Returns:
        Report with the worst octave ratio against 2^-j (1 + DECAY_SLACK); params
        hold C_j, the measured constant and the envelopes
    """
    start = time.perf_counter()
    validate_interval(a, b)
    if C_j is not None:
        validate_positive(C_j, "C_j")
    x = np.linspace(a, b, STATIONARY_SAMPLES)
    amplitude = float(np.max(np.abs(np.asarray(sample(g, x), dtype=np.complex128))))
    params: dict[str, Any] = {"B": B, "j": j, "a": a, "b": b}

    slope = _min_abs_derivative(phase_family, B, a, b)
    if slope < B * (1 - 1e-9):
        logger.warning(f"min |f'| = {slope:.6g} < B = {B}: decay hypothesis not met")
        return VerificationReport.bound(
            "nonstationary_decay",
            0.0,
            0.0,
            params={**params, "min_abs_derivative": slope},
            passed=False,
            check=CheckKind.DECAY,
            elapsed_ms=(time.perf_counter() - start) * 1000,
        )

    envelopes = []
    for octave in range(NONSTATIONARY_OCTAVES):
        low = B * 2**octave
        scales = np.geomspace(low, 2 * low, NONSTATIONARY_OCTAVE_SAMPLES, endpoint=False)
        magnitudes = [
            abs(
                oscillatory_quadrature(
                    g, lambda t, s=float(s): phase_family(t, s), a, b
                ).value
            )
            for s in scales
        ]
        envelopes.append(max(magnitudes))

    floor = DECAY_NOISE_FLOOR * (b - a) * max(amplitude, 1.0)
    allowed = 2.0**-j * (1 + DECAY_SLACK)
    ratios = [
        later / earlier if earlier > floor else 0.0
        for earlier, later in zip(envelopes, envelopes[1:], strict=False)
    ]
    decay_ok = all(
        later <= floor or ratio <= allowed
        for ratio, later in zip(ratios, envelopes[1:], strict=True)
    )
    worst = max(
        (ratio for ratio, later in zip(ratios, envelopes[1:], strict=True) if later > floor),
        default=0.0,
    )

    calibrated = C_j is None
    constant = envelopes[0] * B**j * (1 + DECAY_SLACK) if C_j is None else C_j
    edges = [B * 2**octave for octave in range(NONSTATIONARY_OCTAVES)]
    measured = max(
        (envelope * edge**j for envelope, edge in zip(envelopes, edges, strict=True) if envelope > floor),
        default=0.0,
    )
    constant_ok = all(
        envelope <= floor or envelope <= constant * edge**-j
        for envelope, edge in zip(envelopes, edges, strict=True)
    )
    if not constant_ok:
        logger.warning(f"|I| reaches {measured:.6g} B^-{j}, above C_j = {constant:.6g}")

    return VerificationReport.bound(
        "nonstationary_decay",
        worst,
        allowed,
        params={
            **params,
            "C_j": constant,
            "C_j_calibrated": calibrated,
            "measured_C_j": measured,
            "envelopes": envelopes,
        },
        passed=decay_ok and constant_ok,
        check=CheckKind.DECAY,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )
