"""
Complete character sums arising after Poisson summation and Cauchy-Schwarz.

Every sum is evaluated by brute force with exact phases: each term is a
product of table lookups of unit modulus (or 0), so the accumulated error
stays below ROUNDING_PER_TERM times the number of terms.
"""

from math import gcd, sqrt

import numpy as np
import numpy.typing as npt
from loguru import logger

from src.charsums.rational import RationalFunction
from src.charsums.weil import multiplicative_part
from src.core.constants import (
    CHARSUM_BOUND_CONSTANT,
    CHARSUM_EXACT_TOLERANCE,
    CHARSUM_TOLERANCE,
    ROUNDING_PER_TERM,
)
from src.core.exceptions.verification import BoundViolationError, PreconditionViolatedError
from src.core.models.charsum import CharSumResult
from src.core.utils.decorators import log_verification
from src.core.types.numeric import exact_phase
from src.numtheory.characters import DirichletCharacter, discrete_log_table
from src.numtheory.modarith import inverse_or_zero, mod_inverse


def _require_prime_power(chi: DirichletCharacter, operation: str) -> tuple[int, int]:
    if not chi.is_prime_power:
        raise PreconditionViolatedError(operation, f"chi modulo {chi.modulus} is not a prime-power character")
    return chi.p, chi.r


# First Poisson sum


def _poisson_frequency(p: int, r: int, q: int, a: int, b: int, m: int, ell: int) -> int:
    """c = m - (a_bar + b q) p^(r - l), the combined frequency over p^r q."""
    return m - (inverse_or_zero(a, q) + b * q) * p ** (r - ell)


def poisson_closed_form(chi: DirichletCharacter, q: int, c: int) -> complex:
    """q chi(q) conj chi(c) tau_chi when q | c, else 0."""
    if c % q:
        return 0j
    return complex(q * chi(q) * np.conj(chi(c)) * chi.gauss_sum.value)


def charsum_C(chi: DirichletCharacter, q: int, a: int, b: int, m: int, ell: int) -> CharSumResult:
    """Sum over beta mod p^r q of chi(beta) e(-(a_bar + bq) beta / (p^l q) + m beta / (p^r q)).

    Evaluated by direct summation and compared with the closed form
    q chi(q) conj chi(c) tau_chi [c = 0 mod q], c = m - (a_bar + bq) p^(r-l).

    Args:
        chi: Primitive character modulo p^r
        q: Modulus coprime to p
        a: Unit modulo q
        b: Integer in [0, p^l)
        m: Dual frequency
        ell: Congruence exponent, 0 <= l < r

    Returns:
        CharSumResult with the closed form

    Raises:
        PreconditionViolatedError: If any hypothesis of the closed form fails
        BoundViolationError: If direct sum and closed form differ by CHARSUM_EXACT_TOLERANCE or more
    """
    p, r = _require_prime_power(chi, "charsum_C")
    if q < 1 or gcd(q, p) != 1:
        raise PreconditionViolatedError("charsum_C", f"q = {q} must be a positive integer coprime to {p}")
    if gcd(a, q) != 1:
        raise PreconditionViolatedError("charsum_C", f"gcd({a}, {q}) > 1")
    if not 0 <= ell < r:
        raise PreconditionViolatedError("charsum_C", f"need 0 <= l < r, got l = {ell}, r = {r}")
    if not 0 <= b < p**ell:
        raise PreconditionViolatedError("charsum_C", f"b = {b} outside [0, {p**ell})")
    if not chi.primitive:
        raise PreconditionViolatedError("charsum_C", "the closed form needs a primitive character")

    modulus = chi.modulus * q
    c = _poisson_frequency(p, r, q, a, b, m, ell)
    beta = np.arange(modulus, dtype=np.int64)
    value = complex(np.sum(chi.evaluate_many(beta) * exact_phase(beta * (c % modulus), modulus)))
    closed = poisson_closed_form(chi, q, c)

    discrepancy = abs(value - closed)
    if discrepancy >= CHARSUM_EXACT_TOLERANCE:
        raise BoundViolationError(discrepancy, CHARSUM_EXACT_TOLERANCE, "charsum_C closed form")
    return CharSumResult(
        value=value,
        modulus=modulus,
        closed_form=closed,
        notes={"c": c, "zero_case": c % q != 0},
    )


def poisson_sum_table(chi: DirichletCharacter, q: int) -> npt.NDArray[np.complex128]:
    """sum over beta mod p^r q of chi(beta) e(beta c / (p^r q)) for every c at once (FFT)."""
    modulus = chi.modulus * q
    extended = chi.evaluate_many(np.arange(modulus))
    return modulus * np.fft.ifft(extended)


def poisson_closed_form_table(chi: DirichletCharacter, q: int) -> npt.NDArray[np.complex128]:
    """Closed form of poisson_sum_table at every c in [0, p^r q)."""
    c = np.arange(chi.modulus * q)
    scale = q * chi(q) * chi.gauss_sum.value
    return np.where(c % q == 0, scale * np.conj(chi.evaluate_many(c)), 0)


# Sum A


def default_ell(r: int) -> int:
    """l = 2 floor(r / 3)."""
    return 2 * (r // 3)


def is_coherent_tuple(
    p: int, r: int, m: int, m_prime: int, q: int, q_prime: int, n: int, ell: int | None = None
) -> bool:
    """m'(n + q') + q m = 0 (mod p^(l/2)), l = 2 floor(r / 3) by default.

    For primitive chi, A vanishes identically off this congruence and has
    size p^l on it.
    """
    ell = default_ell(r) if ell is None else ell
    return (m_prime * (n + q_prime) + q * m) % p ** (ell // 2) == 0


def coherence_valuation(p: int, ell: int, m: int, m_prime: int, q: int, q_prime: int, n: int) -> int:
    """v_p(m'(n + q') + q m), capped at l."""
    value = m_prime * (n + q_prime) + q * m
    v = 0
    while v < ell and value % p ** (v + 1) == 0:
        v += 1
    return v


def expected_magnitude_A(
    p: int, r: int, m: int, m_prime: int, q: int, q_prime: int, n: int, ell: int | None = None
) -> int:
    """|A| for primitive chi and units m, m'.

    Expanding chi(1 + x p^(r-l)) through the p-adic logarithm, every term past the
    linear one carries the factor m'(n + q') + q m once the tuple is coherent, so A
    is a unit times the Ramanujan sum c_{p^l}. Off coherence A vanishes. With
    v = v_p(m'(n + q') + q m) the modulus is phi(p^l) for v >= l, p^(l-1) for
    v = l - 1 and 0 below.
    """
    ell = default_ell(r) if ell is None else ell
    v = coherence_valuation(p, ell, m, m_prime, q, q_prime, n)
    if v >= ell:
        return (p - 1) * p ** (ell - 1)
    if v == ell - 1 and v >= ell // 2:
        return p ** (ell - 1)
    return 0


def _twist_frequency(chi: DirichletCharacter, h: int) -> int:
    """b with chi(1 + p^(r-h)) = e(b / p^h)."""
    p, r = chi.p, chi.r
    modulus = chi.modulus
    phi = modulus - modulus // p
    t = int(discrete_log_table(p, r)[(1 + p ** (r - h)) % modulus])
    return (chi.components[0].index * (t // (phi // p**h))) % p**h


def _reduce_sum_A(
    chi: DirichletCharacter, m: int, m_prime: int, c: int, ell: int
) -> tuple[complex, complex, int, int]:
    """Reduced double sum, collapsed single sum, admissible count and b."""
    p, r = chi.p, chi.r
    modulus = chi.modulus
    h = ell // 2
    ph = p**h
    b = _twist_frequency(chi, h)
    if m % p == 0:
        return 0j, 0j, 0, b

    step = p ** (r - ell)
    alpha2 = np.array([a for a in range(ph) if a % p], dtype=np.int64)
    D = (m - alpha2 * step) % modulus
    D_bar = np.array([pow(int(d), -1, modulus) for d in D], dtype=np.int64)
    M = (m_prime + c * alpha2 % modulus * step) % modulus
    A = M * D_bar % modulus
    B = (M * D_bar % modulus * D_bar + c * D_bar) % modulus

    alpha1 = np.arange(ph, dtype=np.int64)
    arguments = (A[:, None] + (B[:, None] * alpha1[None, :]) % modulus * p ** (r - h)) % modulus
    reduced = complex(np.sum(chi.evaluate_many(arguments)))

    units = A % p != 0
    A_bar = np.array([pow(int(x), -1, modulus) if u else 0 for x, u in zip(A, units, strict=True)])
    admissible = units & ((b * (A_bar % ph) * (B % ph)) % ph == 0)
    collapsed = complex(ph * np.sum(chi.evaluate_many(A[admissible])))
    return reduced, collapsed, int(np.count_nonzero(admissible)), b


@log_verification
def charsum_A(
    chi: DirichletCharacter,
    m: int,
    m_prime: int,
    q: int,
    q_prime: int,
    n: int,
    ell: int | None = None,
    reduction: bool = False,
) -> CharSumResult:
    """A = sum* over alpha mod p^l of conj chi(m - alpha p^(r-l)) chi(m' + alpha q (n+q')^-1 p^(r-l)).

    Args:
        chi: Character modulo p^r
        m: First dual frequency
        m_prime: Second dual frequency
        q: First modulus
        q_prime: Second modulus
        n: Shift; n + q' must be a unit modulo p
        ell: Congruence exponent, 2 floor(r / 3) when None
        reduction: Also evaluate the split alpha = alpha1 p^(l/2) + alpha2 and
            assert both reduced forms reproduce the direct sum

    Returns:
        CharSumResult with bound 4 p^(l/2); in reduction mode closed_form holds
        the collapsed sum and notes the reduced sum, the admissible count and b

    Raises:
        PreconditionViolatedError: If r < 3, p | n + q', or l is out of range
        BoundViolationError: If a reduced form disagrees with the direct sum
    """
    p, r = _require_prime_power(chi, "charsum_A")
    if r < 3:
        raise PreconditionViolatedError("charsum_A", f"need r >= 3, got r = {r}")
    ell = default_ell(r) if ell is None else ell
    if not 1 <= ell < r:
        raise PreconditionViolatedError("charsum_A", f"need 1 <= l < r, got l = {ell}")
    if (n + q_prime) % p == 0:
        raise PreconditionViolatedError("charsum_A", f"n + q' = {n + q_prime} is divisible by {p}")

    modulus = chi.modulus
    c = q * int(mod_inverse(n + q_prime, modulus)) % modulus
    step = p ** (r - ell)
    alpha = np.array([a for a in range(p**ell) if a % p], dtype=np.int64)
    first = np.conj(chi.evaluate_many((m - alpha * step) % modulus))
    second = chi.evaluate_many((m_prime + (alpha * c) % modulus * step) % modulus)
    value = complex(np.sum(first * second))

    bound = CHARSUM_BOUND_CONSTANT * p ** (ell / 2)
    notes: dict[str, object] = {
        "ell": ell,
        "coherent": is_coherent_tuple(p, r, m, m_prime, q, q_prime, n, ell),
    }
    closed_form = None
    if reduction:
        if ell % 2:
            raise PreconditionViolatedError("charsum_A", f"the alpha split needs l even, got l = {ell}")
        reduced, collapsed, admissible, b = _reduce_sum_A(chi, m, m_prime, c, ell)
        for name, candidate in (("reduced", reduced), ("collapsed", collapsed)):
            discrepancy = abs(candidate - value)
            if discrepancy >= CHARSUM_TOLERANCE:
                raise BoundViolationError(discrepancy, CHARSUM_TOLERANCE, f"charsum_A {name} form")
        logger.debug(f"A reduction: {admissible} admissible alpha2 of {p ** (ell // 2)}, b = {b}")
        notes.update({"reduced": reduced, "admissible": admissible, "b": b})
        closed_form = collapsed

    return CharSumResult(
        value=value,
        modulus=modulus,
        closed_form=closed_form,
        bound=bound,
        satisfied=abs(value) <= bound + ROUNDING_PER_TERM * len(alpha),
        notes=notes,
    )


# Sum B


def beta_function(P1: int, m: int, m_prime: int, n: int, q: int, P2: int) -> RationalFunction:
    """g(beta) = q_bar (beta - m P2_bar)(1 + n beta) q / (beta (1 + m' P2_bar n) + m' P2_bar) over GF(P1)."""
    P2_bar = inverse_or_zero(P2, P1)
    unit = inverse_or_zero(q, P1) * q
    shift = m * P2_bar
    numerator = (unit * n, unit * (1 - shift * n), -unit * shift)
    denominator = (1 + m_prime * P2_bar * n, m_prime * P2_bar)
    return RationalFunction(P1, numerator, denominator)


@log_verification
def charsum_B(chi1: DirichletCharacter, m: int, m_prime: int, n: int, q: int, P2: int) -> CharSumResult:
    """B = sum over beta mod P1 of chi1(g(beta)), chi1 of a non-unit contributing 0.

    Args:
        chi1: Character modulo the odd prime P1
        m: First dual frequency
        m_prime: Second dual frequency
        n: Shift
        q: Unit modulo P1
        P2: Second prime-power modulus, a unit modulo P1

    Returns:
        CharSumResult with bound 4 sqrt(P1)

    Raises:
        PreconditionViolatedError: If P1 is not prime, q or P2 is not a unit,
            or g is a constant times an ord(chi1)-th power
    """
    P1, r = _require_prime_power(chi1, "charsum_B")
    if r != 1:
        raise PreconditionViolatedError("charsum_B", f"chi1 must live modulo a prime, got {P1}^{r}")
    for value, name in ((q, "q"), (P2, "P2")):
        if value % P1 == 0:
            raise PreconditionViolatedError("charsum_B", f"{name} = {value} is not a unit modulo {P1}")

    g = beta_function(P1, m, m_prime, n, q, P2)
    if g.is_power(chi1.order):
        raise PreconditionViolatedError("charsum_B", f"g = {g} is a constant times a {chi1.order}-th power")

    value = complex(np.sum(multiplicative_part(chi1, g)))
    bound = CHARSUM_BOUND_CONSTANT * sqrt(P1)
    return CharSumResult(
        value=value,
        modulus=P1,
        bound=bound,
        satisfied=abs(value) <= bound + ROUNDING_PER_TERM * P1,
        notes={"n1": g.zeros_and_poles(), "g": str(g)},
    )
