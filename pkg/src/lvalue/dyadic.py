"""
Dyadic sums S(N) and their circle-method representation.

    S(N) = sum lambda(n) chi(n) V(n / N)

is rewritten as a double sum over n and m joined by delta(n - m). The
congruence n = m (mod p^l) is detected by an average of additive characters
modulo p^l, and delta((n - m) / p^l) by the circle-method expansion with
Q = (N / p^l)^(1/2). Both sides are finite, so they agree up to rounding.
"""

import time
from math import ceil, floor, sqrt

import numpy as np
import numpy.typing as npt
from loguru import logger

from src.core.constants import (
    DECOMPOSITION_MAX_TERMS,
    DECOMPOSITION_TOLERANCE,
    ROUNDING_PER_TERM,
)
from src.core.exceptions.verification import (
    BoundViolationError,
    PreconditionViolatedError,
    SizeLimitError,
)
from src.core.models.config import DeltaConfig
from src.core.models.report import VerificationReport
from src.core.protocols import CoefficientSource
from src.core.types.numeric import roots_of_unity
from src.core.utils.decorators import log_verification, validate_inputs
from src.numtheory.characters import DirichletCharacter
from src.numtheory.forms import divisor_counts
from src.transforms.delta import delta_expand
from src.transforms.windows import SmoothWindow


def window_range(N: int, window: SmoothWindow) -> npt.NDArray[np.int64]:
    """Integers n >= 1 with n / N in the window support."""
    low, high = window.support
    return np.arange(max(1, ceil(N * low)), floor(N * high) + 1, dtype=np.int64)


def _weighted_coefficients(
    form: CoefficientSource, N: int, window: SmoothWindow
) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.float64]]:
    n = window_range(N, window)
    if n[-1] > form.cache_bound:
        raise SizeLimitError(int(n[-1]), form.cache_bound, "dyadic sum support")
    coefficients = form.normalized_table(int(n[-1]))[n]
    return n, coefficients * window(n / N)


@validate_inputs
def dyadic_sum_S(
    form: CoefficientSource,
    chi: DirichletCharacter,
    N: int,
    window: SmoothWindow | None = None,
) -> complex:
    """Exact S(N) over the window support.

    Args:
        form: Coefficient source
        chi: Dirichlet character
        N: Dyadic scale
        window: Window V on the unit scale, the bump on [1, 2] by default

    Returns:
        sum of lambda(n) chi(n) V(n / N)

    Raises:
        SizeLimitError: If the support runs past the coefficient cache
        BoundViolationError: If |S(N)| exceeds the divisor-sum bound
    """
    window = window or SmoothWindow()
    n, weighted = _weighted_coefficients(form, N, window)
    value = complex(np.sum(weighted * chi.evaluate_many(n)))

    # Deligne: |lambda(n)| <= d(n)
    bound = float(np.sum(divisor_counts(int(n[-1]))[n] * np.abs(window(n / N))))
    if abs(value) > bound + ROUNDING_PER_TERM * n.size:
        raise BoundViolationError(abs(value), bound, f"S({N})")
    return value


@log_verification
def decomposition_verify(
    form: CoefficientSource,
    chi: DirichletCharacter,
    N: int,
    ell: int,
    window: SmoothWindow | None = None,
) -> VerificationReport:
    """Check S(N) against its circle-method double sum.

    The m-variable carries chi and an indicator of the window support; the
    b-average modulo p^l and delta((n - m) / p^l) join it to the n-variable.
    ell = 0 leaves the plain delta expansion.

    Args:
        form: Coefficient source
        chi: Character modulo p^r
        N: Dyadic scale
        ell: Exponent of the congruence modulus, 0 <= ell <= r
        window: Window V, the bump on [1, 2] by default

    Returns:
        Report comparing the direct sum with the double sum

    Raises:
        PreconditionViolatedError: If chi is not a prime-power character or ell is out of range
        SizeLimitError: If N p^l Q^2 exceeds DECOMPOSITION_MAX_TERMS
    """
    start = time.perf_counter()
    window = window or SmoothWindow()
    if not chi.is_prime_power:
        raise PreconditionViolatedError("decomposition_verify", "chi must live modulo p^r")
    p, r = chi.p, chi.r
    if not 0 <= ell <= r:
        raise PreconditionViolatedError(
            "decomposition_verify", f"need 0 <= l <= r = {r}, got {ell}"
        )
    modulus = p**ell
    Q = sqrt(N / modulus)
    if Q < 1:
        raise PreconditionViolatedError("decomposition_verify", f"N = {N} is below p^l = {modulus}")
    terms = N * modulus * Q * Q
    if terms > DECOMPOSITION_MAX_TERMS:
        raise SizeLimitError(terms, DECOMPOSITION_MAX_TERMS, "decomposition term count")

    direct = dyadic_sum_S(form, chi, N, window)
    n, weighted = _weighted_coefficients(form, N, window)
    m = n
    chi_m = chi.evaluate_many(m)

    difference = n[:, None] - m[None, :]
    residues = np.mod(difference, modulus)
    phases = roots_of_unity(modulus)
    congruence = np.zeros(difference.shape, dtype=np.complex128)
    for b in range(modulus):
        congruence += phases[(b * residues) % modulus]
    congruence /= modulus

    divisible = residues == 0
    quotients = difference[divisible] // modulus
    expansions = {int(k): delta_expand(DeltaConfig(n=int(k), Q=Q)) for k in np.unique(quotients)}
    delta = np.zeros(difference.shape, dtype=np.float64)
    delta[divisible] = [expansions[int(k)] for k in quotients]

    decomposed = complex(weighted @ (congruence * delta) @ chi_m)
    logger.debug(
        f"S({N}) modulo {modulus}: {len(expansions)} delta values, Q = {Q:.4f}",
        extra={"p": p, "r": r, "ell": ell},
    )
    return VerificationReport.compare(
        "decomposition_S_N",
        direct,
        decomposed,
        DECOMPOSITION_TOLERANCE,
        params={**chi.to_dict(), "N": N, "ell": ell, "Q": Q},
        truncation={"pairs": int(difference.size), "delta_values": len(expansions)},
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )
