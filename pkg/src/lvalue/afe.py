"""
Approximate functional equation for L(f x chi, s) at the central point.

    L(1/2) = sum lambda(n) chi(n) n^(-1/2) V(n / X) + eps sum lambda(n) conj chi(n) n^(-1/2) V(n X)

    V(y) = (1 / 2 pi i) integral over (c) of Y^(-u) G(u) Gamma(a + u) / Gamma(a) du / u

with Y = 2 pi y / P and a = s + (k - 1) / 2. V is integrated on a vertical
line right of 0, or left of 0 plus the residue 1, whichever has the smaller
integrand. It is tabulated once per (s, k, G) on a log grid in Y and read
back through a cubic spline. The root number eps is solved from two values
of X and never assumed.
"""

import cmath
import time
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import ceil, log, pi, sqrt

import numpy as np
import numpy.typing as npt
from loguru import logger
from scipy.interpolate import CubicSpline
from scipy.special import loggamma

from src.core.constants import (
    AFE_AGREEMENT_TOLERANCE,
    AFE_CONTOUR_HEIGHT,
    AFE_CONTOUR_SHIFT,
    AFE_CONTOUR_STEP,
    AFE_LEFT_SHIFT_MAX,
    AFE_REALITY_TOLERANCE,
    AFE_RESIDUAL_FLOOR,
    AFE_RESIDUAL_TOLERANCE,
    AFE_TABLE_CHUNK,
    AFE_TABLE_LOG_STEP,
    AFE_TABLE_Y_MAX,
    AFE_TABLE_Y_MIN,
    AFE_TAIL_TOLERANCE,
    AFE_TRUNCATION_CONSTANT,
    AFE_V_TOLERANCE,
    CENTRAL_VALUE_NOISE_FLOOR,
    ROOT_NUMBER_TOLERANCE,
)
from src.core.enums import CheckKind, ContourWeight
from src.core.exceptions.verification import (
    NonConvergentError,
    PreconditionViolatedError,
    QuadratureFailureError,
    RootNumberInconsistentError,
    SizeLimitError,
)
from src.core.models.central_value import CentralValue
from src.core.models.config import AfeConfig
from src.core.models.report import VerificationReport
from src.core.protocols import CoefficientSource
from src.core.types.numeric import i_power, snap_to_fourth_root
from src.core.utils.decorators import log_verification, validate_inputs
from src.core.utils.validation import validate_positive_int
from src.numtheory.characters import DirichletCharacter

CENTRAL_POINT = 0.5


def gamma_shift(s: complex, k: int) -> complex:
    """a = s + (k - 1) / 2, the argument of the Gamma factor."""
    return s + (k - 1) / 2


def left_abscissa(a: complex) -> float:
    """Distance of the left contour from 0, halfway to the first Gamma pole at most."""
    return min(AFE_LEFT_SHIFT_MAX, a.real / 2)


@lru_cache(maxsize=64)
def contour_terms(
    s: complex, k: int, G: ContourWeight, c: float, step: float
) -> tuple[npt.NDArray[np.complex128], npt.NDArray[np.complex128]]:
    """Nodes u = c + it and trapezoid weights of the V integrand without Y^(-u).

    The nodes are symmetric about t = 0 with an odd count, so every other
    node forms the step-doubled subgrid.
    """
    a = gamma_shift(s, k)
    half = round(AFE_CONTOUR_HEIGHT / step)
    t = step * np.arange(-half, half + 1, dtype=np.float64)
    u = c + 1j * t
    ratio = np.exp(loggamma(a + u) - loggamma(a))
    weights = (step / (2 * pi)) * G.evaluate(u) * ratio / u
    u.setflags(write=False)
    weights.setflags(write=False)
    return u, weights


def _log_scale(log_y: npt.NDArray[np.float64], a: complex, c: float) -> npt.NDArray[np.float64]:
    """log |Y^(-c) Gamma(a + c) / Gamma(a)|."""
    return -c * log_y + float((loggamma(a + c) - loggamma(a)).real)


def _integrate(
    log_y: npt.NDArray[np.float64], s: complex, k: int, G: ContourWeight, sigma: float, step: float
) -> tuple[npt.NDArray[np.complex128], npt.NDArray[np.float64]]:
    """V and |V - V_subgrid| at every log Y."""
    a = gamma_shift(s, k)
    right, left = sigma, -left_abscissa(a)
    use_left = _log_scale(log_y, a, left) < _log_scale(log_y, a, right)

    values = np.empty(log_y.shape, dtype=np.complex128)
    errors = np.empty(log_y.shape, dtype=np.float64)
    for c, mask in ((right, ~use_left), (left, use_left)):
        indices = np.flatnonzero(mask)
        if indices.size == 0:
            continue
        u, weights = contour_terms(s, k, G, c, step)
        residue = 1.0 if c < 0 else 0.0
        for start in range(0, indices.size, AFE_TABLE_CHUNK):
            block = indices[start : start + AFE_TABLE_CHUNK]
            powers = np.exp(-np.outer(log_y[block], u))
            full = powers @ weights
            coarse = powers[:, ::2] @ (2.0 * weights[::2])
            values[block] = residue + full
            errors[block] = np.abs(full - coarse)
    return values, errors


@validate_inputs
def v_weight(
    y: float,
    s: complex = CENTRAL_POINT,
    k: int = 12,
    P: int = 1,
    G: ContourWeight = ContourWeight.EXP_SQUARE,
    step: float = AFE_CONTOUR_STEP,
    sigma: float = AFE_CONTOUR_SHIFT,
) -> complex:
    """Cutoff V_s(y) by trapezoid quadrature on a vertical contour.

    Args:
        y: Positive argument
        s: Point of the functional equation
        k: Weight of the form
        P: Conductor of the character
        G: Even contour weight with G(0) = 1
        step: Trapezoid step in Im u
        sigma: Abscissa of the right contour

    Returns:
        V_s(y)

    Raises:
        QuadratureFailureError: If the step-doubled subgrid disagrees
    """
    validate_positive_int(P, "P")
    log_y = np.array([log(2 * pi * y / P)])
    values, errors = _integrate(log_y, s, k, G, sigma, step)
    if errors[0] > AFE_V_TOLERANCE:
        raise QuadratureFailureError(float(errors[0]), AFE_V_TOLERANCE, "V contour integral")
    return complex(values[0])


@dataclass(frozen=True)
class CutoffTable:
    """V on a log grid in Y = 2 pi y / P.

    Below the grid V is held at its first value (V -> 1 as y -> 0); above it
    V is 0. tail_y is the first knot after the last |V| above the tail
    tolerance.
    """

    log_y: npt.NDArray[np.float64]
    values: npt.NDArray[np.complex128]
    tail_y: float

    @cached_property
    def _splines(self) -> tuple[CubicSpline, CubicSpline]:
        return CubicSpline(self.log_y, self.values.real), CubicSpline(self.log_y, self.values.imag)

    def __call__(self, Y: npt.ArrayLike) -> npt.NDArray[np.complex128]:
        log_y = np.log(np.asarray(Y, dtype=np.float64))
        real, imag = self._splines
        out = real(log_y) + 1j * imag(log_y)
        out = np.where(log_y < self.log_y[0], self.values[0], out)
        return np.where(log_y > self.log_y[-1], 0.0, out)


@lru_cache(maxsize=16)
def cutoff_table(
    s: complex, k: int, G: ContourWeight, sigma: float = AFE_CONTOUR_SHIFT
) -> CutoffTable:
    """Tabulate V_s for one weight and contour choice.

    Raises:
        QuadratureFailureError: If any knot fails the subgrid check
        NonConvergentError: If V has not decayed by the end of the table
    """
    start = time.perf_counter()
    log_y = np.arange(log(AFE_TABLE_Y_MIN), log(AFE_TABLE_Y_MAX), AFE_TABLE_LOG_STEP)
    values, errors = _integrate(log_y, s, k, G, sigma, AFE_CONTOUR_STEP)
    worst = float(errors.max())
    if worst > AFE_V_TOLERANCE:
        raise QuadratureFailureError(worst, AFE_V_TOLERANCE, "V table")

    significant = np.flatnonzero(np.abs(values) > AFE_TAIL_TOLERANCE)
    if significant.size == 0 or significant[-1] + 1 >= log_y.size:
        raise NonConvergentError(
            f"V_{s} for G = {G.value} stays above {AFE_TAIL_TOLERANCE} up to Y = {AFE_TABLE_Y_MAX}"
        )
    tail_y = float(np.exp(log_y[significant[-1] + 1]))
    log_y.setflags(write=False)
    values.setflags(write=False)
    logger.debug(
        f"Tabulated V for G = {G.value}, k = {k}: {log_y.size} knots, tail at Y = {tail_y:.4g}",
        extra={"elapsed_ms": round((time.perf_counter() - start) * 1000, 2)},
    )
    return CutoffTable(log_y=log_y, values=values, tail_y=tail_y)


def afe_truncation(
    P: int,
    k: int,
    G: ContourWeight = ContourWeight.EXP_SQUARE,
    X: float = 1.0,
    sigma: float = AFE_CONTOUR_SHIFT,
) -> int:
    """Length of both AFE sums for X, 2X and X/2.

    The larger of 30 sqrt(P) (k / 2 pi) log(P + 10) and the n at which
    V(n / X') and V(n X') fall below the tail tolerance for every X' used.
    """
    heuristic = AFE_TRUNCATION_CONSTANT * sqrt(P) * (k / (2 * pi)) * log(P + 10)
    tail = cutoff_table(CENTRAL_POINT, k, G, sigma).tail_y
    decay = tail * 2 * max(X, 1 / X) * P / (2 * pi)
    return ceil(max(heuristic, decay))


def _afe_sums(
    coefficients: npt.NDArray[np.float64],
    chi: DirichletCharacter,
    table: CutoffTable,
    X: float,
) -> tuple[complex, complex]:
    """The two sums of the AFE before the root number is applied."""
    P = chi.modulus
    n = np.arange(1, coefficients.size + 1)
    chi_n = chi.evaluate_many(n)
    base = coefficients / np.sqrt(n)
    direct = complex(np.sum(base * chi_n * table(2 * pi * n / (X * P))))
    dual = complex(np.sum(base * np.conj(chi_n) * table(2 * pi * n * X / P)))
    return direct, dual


def predicted_root_number(chi: DirichletCharacter, k: int) -> complex:
    """i^k tau_chi^2 / P."""
    return i_power(k) * chi.gauss_sum.value**2 / chi.modulus


@log_verification
def central_value(
    form: CoefficientSource, chi: DirichletCharacter, config: AfeConfig | None = None
) -> CentralValue:
    """L(f x chi, 1/2) with a numerically solved root number.

    eps is solved from X and 2X, checked to be unimodular and compared with
    i^k tau_chi^2 / P. When the ratio is a fourth root of unity the prediction
    times that unit replaces the solved value. The residual compares X with
    2X and X/2.

    Args:
        form: Level-one eigenform
        chi: Primitive character of modulus P > 1
        config: Contour weight, balance X and optional fixed truncation

    Returns:
        The central value with its residual and root number

    Raises:
        PreconditionViolatedError: If chi is imprimitive or trivial
        SizeLimitError: If the truncation exceeds the coefficient cache
        RootNumberInconsistentError: If no unimodular eps fits
    """
    config = config or AfeConfig()
    if chi.modulus == 1 or not chi.primitive:
        raise PreconditionViolatedError(
            "central_value", f"character {chi.to_dict()} must be primitive with modulus > 1"
        )
    P, k = chi.modulus, form.weight
    truncation = config.truncation or afe_truncation(P, k, config.G, config.X, config.sigma)
    if truncation > form.cache_bound:
        raise SizeLimitError(truncation, form.cache_bound, "AFE truncation")

    coefficients = form.normalized_table(truncation)[1:]
    table = cutoff_table(CENTRAL_POINT, k, config.G, config.sigma)
    balances = (config.X, 2 * config.X, config.X / 2)
    sums = [_afe_sums(coefficients, chi, table, X) for X in balances]
    (direct, dual), (direct_2, dual_2), _ = sums

    epsilon = (direct - direct_2) / (dual_2 - dual)
    if abs(abs(epsilon) - 1) > ROOT_NUMBER_TOLERANCE:
        raise RootNumberInconsistentError(abs(epsilon))

    predicted = predicted_root_number(chi, k)
    unit = epsilon / predicted
    snapped = snap_to_fourth_root(unit)
    if snapped is not None:
        epsilon = snapped * predicted
        unit = snapped
        logger.info(f"Root number of {chi.to_dict()} is {snapped} * i^k tau^2 / P")
    else:
        logger.warning(f"Root number unit {unit:.8f} of {chi.to_dict()} is not a fourth root")

    values = [a + epsilon * b for a, b in sums]
    scale = max(abs(values[0]), AFE_RESIDUAL_FLOOR * (abs(direct) + abs(dual)))
    residual = max(abs(values[0] - other) for other in values[1:]) / scale

    result = CentralValue(
        value=values[0],
        conductor=P,
        afe_residual=residual,
        root_number=epsilon,
        root_number_unit=unit,
        truncation=truncation,
        character=chi.to_dict(),
    )
    if not result.is_accepted:
        logger.warning(f"AFE residual {residual:.3e} for {chi.to_dict()} above tolerance")
    return result


def rotated_value(value: CentralValue) -> complex:
    """eps^(-1/2) L(1/2), real whenever the functional equation holds."""
    return value.value / cmath.sqrt(value.root_number)


def reality_report(value: CentralValue) -> VerificationReport:
    """Imaginary part of the rotated central value against AFE_REALITY_TOLERANCE."""
    rotated = rotated_value(value)
    return VerificationReport.compare(
        "afe_reality",
        rotated,
        rotated.real,
        AFE_REALITY_TOLERANCE,
        check=CheckKind.ABSOLUTE,
        params={**value.character, "P": value.conductor},
        truncation={"N": value.truncation},
    )


def residual_report(value: CentralValue) -> VerificationReport:
    """The X-stability residual of one central value."""
    return VerificationReport.bound(
        "afe_x_stability",
        value.afe_residual,
        AFE_RESIDUAL_TOLERANCE,
        params={**value.character, "P": value.conductor, "unit": str(value.root_number_unit)},
        truncation={"N": value.truncation},
        passed=value.is_accepted,
    )


@log_verification
def weight_agreement(
    form: CoefficientSource,
    chi: DirichletCharacter,
    weights: tuple[ContourWeight, ContourWeight] = (ContourWeight.EXP_SQUARE, ContourWeight.SECANT),
    X: float = 1.0,
) -> VerificationReport:
    """Compare central values computed with two contour weights.

    Vanishing values are compared absolutely against the noise floor.
    """
    start = time.perf_counter()
    first, second = (central_value(form, chi, AfeConfig(G=G, X=X)) for G in weights)
    vanishing = max(first.abs_value, second.abs_value) < CENTRAL_VALUE_NOISE_FLOOR
    return VerificationReport.compare(
        "afe_weight_agreement",
        first.value,
        second.value,
        CENTRAL_VALUE_NOISE_FLOOR if vanishing else AFE_AGREEMENT_TOLERANCE,
        check=CheckKind.ABSOLUTE if vanishing else CheckKind.RELATIVE,
        params={**chi.to_dict(), "G": [G.value for G in weights], "X": X},
        truncation={"N": [first.truncation, second.truncation]},
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )
