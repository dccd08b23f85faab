"""
Hecke eigenvalues of level-one holomorphic eigenforms.

Coefficients are exact integers. The series q prod (1 - q^m)^24 is expanded
modulo a few primes just below 2^31, as the eighth power of the sparse
Jacobi series prod (1 - q^m)^3 = sum (-1)^k (2k + 1) q^(k(k+1)/2), and
lifted back to integers by CRT. Weights 16 to 26 are Delta times an
Eisenstein product, each one-dimensional and spanned by a normalized
eigenform.
"""

from functools import cached_property, lru_cache
from math import ceil, log2, prod
from typing import Any

import numpy as np
import numpy.typing as npt
from loguru import logger
from sympy import prevprime

from src.core.constants import (
    COEFFICIENT_PRIME_CEILING,
    DEFAULT_COEFFICIENT_BOUND,
    EISENSTEIN_MAX_COEFFICIENTS,
    MAX_COEFFICIENTS,
    RANKIN_SELBERG_CALIBRATION_X,
    RANKIN_SELBERG_EXPONENT,
    SUPPORTED_WEIGHTS,
)
from src.core.exceptions.verification import SizeLimitError, ValidationError
from src.core.models.report import VerificationReport
from src.core.utils.decorators import log_verification
from src.core.utils.validation import validate_positive, validate_positive_int

# Eisenstein factors of the weight-k eigenform Delta * E_{k-12}
EISENSTEIN_FACTORS: dict[int, tuple[int, ...]] = {
    12: (),
    16: (4,),
    18: (6,),
    20: (4, 4),
    22: (4, 6),
    26: (4, 4, 6),
}

# E_4 = 1 + 240 sum sigma_3(n) q^n, E_6 = 1 - 504 sum sigma_5(n) q^n
EISENSTEIN_SERIES: dict[int, tuple[int, int]] = {4: (240, 3), 6: (-504, 5)}

LIMB_BITS = 16
LIMB_MASK = (1 << LIMB_BITS) - 1


@lru_cache(maxsize=8)
def coefficient_primes(count: int) -> tuple[int, ...]:
    """The count largest primes below COEFFICIENT_PRIME_CEILING."""
    primes: list[int] = []
    candidate = COEFFICIENT_PRIME_CEILING
    while len(primes) < count:
        candidate = int(prevprime(candidate))
        primes.append(candidate)
    return tuple(primes)


def primes_needed(N: int, weight: int) -> int:
    """Residue primes whose product exceeds twice the Deligne bound 2 N^(k/2), with margin."""
    bits = 10 + (weight / 2) * log2(max(N, 2))
    return ceil(bits / (log2(COEFFICIENT_PRIME_CEILING) - 1))


def jacobi_terms(length: int) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
    """Exponents k(k+1)/2 < length and coefficients (-1)^k (2k+1) of prod (1 - q^m)^3."""
    k = np.arange(int(np.sqrt(2 * length)) + 2, dtype=np.int64)
    exponents = k * (k + 1) // 2
    keep = exponents < length
    coefficients = np.where(k % 2 == 0, 1, -1) * (2 * k + 1)
    return exponents[keep], coefficients[keep]


def eta_power_residues(length: int, primes: tuple[int, ...]) -> npt.NDArray[np.int64]:
    """prod (1 - q^m)^24 modulo each prime, truncated to length terms.

    Returns:
        Array of shape (len(primes), length), row i reduced modulo primes[i]
    """
    exponents, coefficients = jacobi_terms(length)
    moduli = np.array(primes, dtype=np.int64)[:, None]

    jacobi = np.zeros((len(primes), length), dtype=np.int64)
    jacobi[:, exponents] = coefficients
    series = jacobi % moduli

    # J^8 by seven sparse passes; partial sums stay below 2^55
    for _ in range(7):
        product = np.zeros_like(series)
        for t, c in zip(exponents.tolist(), coefficients.tolist(), strict=True):
            product[:, t:] += c * series[:, : length - t]
        series = product % moduli
    return series


def divisor_power_residues(N: int, power: int, primes: tuple[int, ...]) -> npt.NDArray[np.int64]:
    """sigma_power(n) modulo each prime for n in [0, N]."""
    powers = np.array(
        [[pow(d, power, p) for d in range(N + 1)] for p in primes], dtype=np.int64
    )
    sigma = np.zeros((len(primes), N + 1), dtype=np.int64)
    for d in range(1, N + 1):
        sigma[:, d::d] += powers[:, d : d + 1]
    return sigma % np.array(primes, dtype=np.int64)[:, None]


def convolve_mod(
    a: npt.NDArray[np.int64], b: npt.NDArray[np.int64], p: int, length: int
) -> npt.NDArray[np.int64]:
    """Truncated product of two series with entries in [0, p), p < 2^31.

    Operands are split into 16-bit limbs so every integer convolution is exact.
    """
    a_low, a_high = a & LIMB_MASK, a >> LIMB_BITS
    b_low, b_high = b & LIMB_MASK, b >> LIMB_BITS
    low = np.convolve(a_low, b_low)[:length] % p
    mid = (np.convolve(a_low, b_high)[:length] + np.convolve(a_high, b_low)[:length]) % p
    high = np.convolve(a_high, b_high)[:length] % p
    shift_mid = (1 << LIMB_BITS) % p
    shift_high = (1 << (2 * LIMB_BITS)) % p
    return (low + mid * shift_mid % p + high * shift_high % p) % p


def eisenstein_residues(weight: int, N: int, primes: tuple[int, ...]) -> npt.NDArray[np.int64]:
    """E_weight for weight in {4, 6}, modulo each prime, for q^0 .. q^N."""
    scale, power = EISENSTEIN_SERIES[weight]
    moduli = np.array(primes, dtype=np.int64)[:, None]
    series = (scale * divisor_power_residues(N, power, primes)) % moduli
    series[:, 0] = 1
    return series


def delta_residues(N: int, primes: tuple[int, ...]) -> npt.NDArray[np.int64]:
    """tau(n) modulo each prime at index n in [0, N]; index 0 holds 0."""
    residues = np.zeros((len(primes), N + 1), dtype=np.int64)
    residues[:, 1:] = eta_power_residues(N, primes)
    return residues


def crt_lift(residues: npt.NDArray[np.int64], primes: tuple[int, ...]) -> npt.NDArray[np.object_]:
    """Centered integer lift of residues modulo the product of primes.

    Args:
        residues: Array of shape (len(primes), n)
        primes: Pairwise distinct primes

    Returns:
        Object array of Python integers in (-M/2, M/2]
    """
    modulus = prod(primes)
    lifted = np.zeros(residues.shape[1], dtype=object)
    for row, p in zip(residues, primes, strict=True):
        cofactor = modulus // p
        basis = cofactor * pow(cofactor, -1, p)
        lifted = lifted + row.astype(object) * basis
    lifted = lifted % modulus
    return np.where(lifted > modulus // 2, lifted - modulus, lifted)


def cusp_form_coefficients(weight: int, N: int) -> npt.NDArray[np.object_]:
    """Exact coefficients a(0..N) of the normalized weight-k eigenform; a(0) = 0."""
    primes = coefficient_primes(primes_needed(N, weight))
    residues = delta_residues(N, primes)
    for factor in EISENSTEIN_FACTORS[weight]:
        eisenstein = eisenstein_residues(factor, N, primes)
        residues = np.stack(
            [
                convolve_mod(row, e_row, p, N + 1)
                for row, e_row, p in zip(residues, eisenstein, primes, strict=True)
            ]
        )
    return crt_lift(residues, primes)


def delta_coefficients(N: int) -> npt.NDArray[np.object_]:
    """Exact Ramanujan tau(1..N) as Python integers.

    Args:
        N: Number of coefficients

    Returns:
        Object array whose entry n - 1 is tau(n)

    Raises:
        SizeLimitError: If N exceeds MAX_COEFFICIENTS
    """
    validate_positive_int(N, "N")
    if N > MAX_COEFFICIENTS:
        raise SizeLimitError(N, MAX_COEFFICIENTS, "coefficient count")
    return cusp_form_coefficients(12, N)[1:]


def divisor_counts(N: int) -> npt.NDArray[np.int64]:
    """d(n) for n in [0, N], with d(0) = 0."""
    counts = np.zeros(N + 1, dtype=np.int64)
    for d in range(1, N + 1):
        counts[d::d] += 1
    return counts


class CuspForm:
    """Normalized level-one Hecke eigenform of weight k with a lazy coefficient cache.

    Attributes:
        weight: Even weight in SUPPORTED_WEIGHTS
        cache_bound: Largest n whose coefficient is cached
    """

    def __init__(self, weight: int = 12, cache_bound: int = DEFAULT_COEFFICIENT_BOUND) -> None:
        """Initialize the form without computing coefficients.

        Args:
            weight: Weight of the one-dimensional cusp form space
            cache_bound: Number of coefficients computed on first use

        Raises:
            ValidationError: If the weight has no one-dimensional space
            SizeLimitError: If cache_bound exceeds the cap for this weight
        """
        if weight not in SUPPORTED_WEIGHTS:
            raise ValidationError(
                f"Unsupported weight {weight}. Supported weights: {SUPPORTED_WEIGHTS}"
            )
        validate_positive_int(cache_bound, "cache_bound")
        limit = MAX_COEFFICIENTS if weight == 12 else EISENSTEIN_MAX_COEFFICIENTS
        if cache_bound > limit:
            raise SizeLimitError(cache_bound, limit, f"weight-{weight} coefficient cache")
        self.weight = weight
        self._cache_bound = cache_bound

    @property
    def cache_bound(self) -> int:
        return self._cache_bound

    @cached_property
    def raw_coefficients(self) -> npt.NDArray[np.object_]:
        """Exact a(n) at index n, for n in [0, cache_bound]."""
        logger.debug(f"Computing {self.cache_bound} coefficients of weight {self.weight}")
        return cusp_form_coefficients(self.weight, self.cache_bound)

    @cached_property
    def normalized(self) -> npt.NDArray[np.float64]:
        """lambda(n) = a(n) / n^((k-1)/2) at index n; index 0 holds 0."""
        n = np.arange(self.cache_bound + 1, dtype=np.float64)
        scale = np.power(n, (self.weight - 1) / 2)
        scale[0] = 1.0
        table = self.raw_coefficients.astype(np.float64) / scale
        table.setflags(write=False)
        return table

    @cached_property
    def rankin_selberg_partials(self) -> npt.NDArray[np.float64]:
        """Cumulative sums of lambda(n)^2 at index n."""
        return np.cumsum(self.normalized**2)

    def _require_cached(self, N: int) -> None:
        if N > self.cache_bound:
            raise SizeLimitError(N, self.cache_bound, "coefficient index")

    def normalized_table(self, N: int) -> npt.NDArray[np.float64]:
        """lambda(0..N) with lambda(0) = 0.

        Raises:
            SizeLimitError: If N exceeds the cache bound
        """
        self._require_cached(N)
        return self.normalized[: N + 1]

    def coefficient(self, n: int) -> int:
        """Exact a(n)."""
        self._require_cached(n)
        return int(self.raw_coefficients[n])

    def eigenvalue(self, n: int) -> float:
        """Normalized lambda(n)."""
        self._require_cached(n)
        return float(self.normalized[n])

    def to_dict(self) -> dict[str, Any]:
        return {"weight": self.weight, "cache_bound": self.cache_bound}

    def __repr__(self) -> str:
        return f"CuspForm(weight={self.weight}, cache_bound={self.cache_bound})"


def normalized_coefficients(form: CuspForm, N: int) -> npt.NDArray[np.float64]:
    """lambda(1..N) of the form.

    Raises:
        SizeLimitError: If N exceeds the cache bound
    """
    validate_positive_int(N, "N")
    return form.normalized_table(N)[1:]


def hecke_relation_defect(form: CuspForm, p: int, j: int) -> int:
    """a(p) a(p^j) - a(p^(j+1)) - p^(k-1) a(p^(j-1)), zero for an eigenform."""
    validate_positive_int(j, "j")
    a_p = form.coefficient(p)
    return (
        a_p * form.coefficient(p**j)
        - form.coefficient(p ** (j + 1))
        - p ** (form.weight - 1) * form.coefficient(p ** (j - 1))
    )


def deligne_violations(form: CuspForm, N: int | None = None) -> npt.NDArray[np.int64]:
    """Indices n <= N with |lambda(n)| > d(n)."""
    N = form.cache_bound if N is None else N
    table = form.normalized_table(N)
    counts = divisor_counts(N)
    excess = np.abs(table[1:]) > counts[1:] * (1 + 1e-12)
    return np.nonzero(excess)[0] + 1


def rankin_selberg_sum(form: CuspForm, x: float) -> float:
    """Sum of lambda(n)^2 over n <= x.

    Raises:
        ValidationError: If x < 1
        SizeLimitError: If x exceeds the cache bound
    """
    validate_positive(x, "x")
    if x < 1:
        raise ValidationError(f"x must be at least 1, got {x}")
    n = int(np.floor(x))
    form._require_cached(n)
    return float(form.rankin_selberg_partials[n])


def rankin_selberg_constant(form: CuspForm, calibration_x: int) -> float:
    """Smallest C with S(x) <= C x^1.01 for every x <= calibration_x."""
    form._require_cached(calibration_x)
    x = np.arange(1, calibration_x + 1, dtype=np.float64)
    partials = form.rankin_selberg_partials[1 : calibration_x + 1]
    return float(np.max(partials / x**RANKIN_SELBERG_EXPONENT))


@log_verification
def rankin_selberg_check(
    form: CuspForm,
    xs: tuple[float, ...] = (1e4, 1e5),
    calibration_x: int = RANKIN_SELBERG_CALIBRATION_X,
) -> list[VerificationReport]:
    """Check S(x) <= C x^1.01 at each x with C calibrated once up to calibration_x."""
    constant = rankin_selberg_constant(form, calibration_x)
    logger.info(f"Rankin-Selberg constant C = {constant:.6f} calibrated at x <= {calibration_x}")
    reports = []
    for x in xs:
        value = rankin_selberg_sum(form, x)
        reports.append(
            VerificationReport.bound(
                "rankin_selberg",
                value,
                constant * x**RANKIN_SELBERG_EXPONENT,
                params={"weight": form.weight, "x": x, "C": constant},
            )
        )
    return reports
