"""
Seeded parameter sweeps over the complete character sums.

Generators draw cases from numpy's default_rng so a seed fixes every tuple.
Degenerate B and Weil draws are logged and redrawn until the requested
number of cases exists. Coherent A tuples are kept and judged by their exact
modulus instead of the bound. The check_* runners are module-level so a
process pool can pickle them.
"""

import time
from collections.abc import Iterator
from dataclasses import asdict, dataclass
from math import gcd

import numpy as np
from loguru import logger

from src.charsums.congruence import (
    alpha_relation_count,
    congruence_solution_count,
    expected_solution_count,
    forced_residue,
)
from src.charsums.rational import RationalFunction
from src.charsums.sums import (
    beta_function,
    charsum_A,
    charsum_B,
    charsum_C,
    default_ell,
    expected_magnitude_A,
    is_coherent_tuple,
    poisson_closed_form_table,
    poisson_sum_table,
)
from src.charsums.weil import weil_sum
from src.core.constants import (
    CHARSUM_EXACT_TOLERANCE,
    CHARSUM_GRID_BOUND,
    CHARSUM_TOLERANCE,
    DEFAULT_SEED,
)
from src.core.enums import CheckKind
from src.core.models.report import VerificationReport
from src.numtheory.characters import make_character, primitive_by_index, quadratic_character
from src.numtheory.modarith import euler_phi

SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
MAX_DRAWS_PER_CASE = 100


def _elapsed_ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000


def _primitive_indices(p: int, r: int, count: int, rng: np.random.Generator) -> list[int]:
    phi = (p - 1) * p ** (r - 1)
    indices = [i for i in range(phi) if primitive_by_index(p, r, i)]
    if len(indices) <= count:
        return indices
    return sorted(int(i) for i in rng.choice(indices, size=count, replace=False))


# First Poisson grid


@dataclass(frozen=True)
class GaussGridCase:
    """All (l, a, b, m) for one primitive chi modulo p^r and one q."""

    p: int
    r: int
    q: int
    index: int
    seed: int = DEFAULT_SEED
    spot_checks: int = 2


def gauss_grid_cases(
    primes: tuple[int, ...] = (3, 5, 7),
    bound: int = CHARSUM_GRID_BOUND,
    characters_per_modulus: int = 2,
    seed: int = DEFAULT_SEED,
) -> Iterator[GaussGridCase]:
    """Every (p, r, q) with p^r q <= bound and gcd(q, p) = 1, with seeded characters."""
    rng = np.random.default_rng(seed)
    for p in primes:
        r = 1
        while p**r <= bound:
            for index in _primitive_indices(p, r, characters_per_modulus, rng):
                for q in range(1, bound // p**r + 1):
                    if q % p:
                        yield GaussGridCase(p, r, q, index, seed=int(rng.integers(2**31)))
            r += 1


def check_gauss_grid_case(case: GaussGridCase) -> VerificationReport:
    """Compare the first Poisson sum with its closed form at every frequency.

    For fixed (a, b) the map m -> c = m - (a_bar + bq) p^(r-l) permutes the
    residues modulo p^r q, so the grid over (l, a, b, m) is covered by the
    FFT table over c. A few seeded tuples are also summed directly.
    """
    start = time.perf_counter()
    chi = make_character(case.p, case.r, case.index)
    modulus = chi.modulus * case.q
    table = poisson_sum_table(chi, case.q)
    closed = poisson_closed_form_table(chi, case.q)
    worst = int(np.argmax(np.abs(table - closed)))

    per_ell = euler_phi(case.q) * modulus
    cases = sum(per_ell * case.p**ell for ell in range(case.r))
    zero_cases = cases - cases // case.q

    rng = np.random.default_rng(case.seed)
    units = [a for a in range(case.q) if gcd(a, case.q) == 1]
    for _ in range(case.spot_checks):
        ell = int(rng.integers(case.r))
        charsum_C(
            chi,
            case.q,
            int(rng.choice(units)),
            int(rng.integers(case.p**ell)),
            int(rng.integers(modulus)),
            ell,
        )

    return VerificationReport.compare(
        "charsum_C_closed_form",
        complex(table[worst]),
        complex(closed[worst]),
        CHARSUM_EXACT_TOLERANCE,
        check=CheckKind.ABSOLUTE,
        params={
            "p": case.p,
            "r": case.r,
            "q": case.q,
            "chi_index": case.index,
            "cases": cases,
            "zero_cases": zero_cases,
        },
        truncation={"spot_checks": case.spot_checks},
        elapsed_ms=_elapsed_ms(start),
    )


# Sum A


@dataclass(frozen=True)
class AlphaCase:
    p: int
    r: int
    index: int
    m: int
    m_prime: int
    q: int
    q_prime: int
    n: int


def alpha_cases(
    primes: tuple[int, ...] = (5, 7),
    exponents: tuple[int, ...] = (3, 6),
    samples: int = 100,
    characters_per_modulus: int = 4,
    seed: int = DEFAULT_SEED,
) -> Iterator[AlphaCase]:
    """Random tuples for every (p, r), coherent ones included.

    m, m' are units modulo p^r, q, q' lie in [1, 50] coprime to p and
    n in [-100, 100] with n + q' a unit modulo p.
    """
    rng = np.random.default_rng(seed)
    for p in primes:
        for r in exponents:
            modulus = p**r
            indices = _primitive_indices(p, r, characters_per_modulus, rng)
            drawn = 0
            for _ in range(MAX_DRAWS_PER_CASE * samples):
                if drawn == samples:
                    break
                m, m_prime = (int(v) for v in rng.integers(1, modulus, size=2))
                q, q_prime = (int(v) for v in rng.integers(1, 51, size=2))
                n = int(rng.integers(-100, 101))
                if m % p == 0 or m_prime % p == 0 or q % p == 0 or q_prime % p == 0 or (n + q_prime) % p == 0:
                    continue
                if is_coherent_tuple(p, r, m, m_prime, q, q_prime, n):
                    logger.debug(f"Coherent A tuple p={p} r={r} m={m} m'={m_prime} q={q} q'={q_prime} n={n}")
                yield AlphaCase(p, r, int(rng.choice(indices)), m, m_prime, q, q_prime, n)
                drawn += 1
            else:
                if drawn < samples:
                    logger.warning(f"Only {drawn} of {samples} A tuples drawn for p={p} r={r}")


def check_alpha_case(case: AlphaCase, reduction: bool = False) -> list[VerificationReport]:
    """Modulus check for every tuple, plus the 4 p^(l/2) bound off coherence.

    Coherent tuples can reach |A| = phi(p^l), above the bound, so they are judged by
    charsum_A_coherent alone.
    """
    start = time.perf_counter()
    chi = make_character(case.p, case.r, case.index)
    result = charsum_A(chi, case.m, case.m_prime, case.q, case.q_prime, case.n, reduction=reduction)
    assert result.bound is not None
    elapsed = _elapsed_ms(start)
    coherent = bool(result.notes["coherent"])
    params = {**asdict(case), "ell": default_ell(case.r), "coherent": coherent}
    expected = expected_magnitude_A(case.p, case.r, case.m, case.m_prime, case.q, case.q_prime, case.n)
    magnitude = VerificationReport.compare(
        "charsum_A_coherent" if coherent else "charsum_A_vanishing",
        abs(result.value),
        expected,
        CHARSUM_TOLERANCE,
        check=CheckKind.ABSOLUTE,
        params=params,
        elapsed_ms=elapsed,
    )
    if coherent:
        return [magnitude]
    bound = VerificationReport.bound(
        "charsum_A_bound",
        result.value,
        result.bound,
        params=params,
        passed=result.satisfied,
        elapsed_ms=elapsed,
    )
    return [bound, magnitude]


# Sum B


@dataclass(frozen=True)
class BetaCase:
    P1: int
    index: int
    m: int
    m_prime: int
    n: int
    q: int
    P2: int


def beta_cases(
    primes: tuple[int, ...] = (11, 31, 101), samples: int = 50, seed: int = DEFAULT_SEED
) -> Iterator[BetaCase]:
    """Random tuples with a nontrivial chi1 and g not a power of its order."""
    rng = np.random.default_rng(seed)
    for P1 in primes:
        drawn = 0
        for _ in range(MAX_DRAWS_PER_CASE * samples):
            if drawn == samples:
                break
            index = int(rng.integers(1, P1 - 1))
            m, m_prime, n = (int(v) for v in rng.integers(0, P1, size=3))
            q = int(rng.integers(1, P1))
            P2 = int(rng.choice([prime for prime in SMALL_PRIMES if prime != P1]))
            order = make_character(P1, 1, index).order
            g = beta_function(P1, m, m_prime, n, q, P2)
            if g.is_power(order):
                logger.warning(f"Skipping degenerate B tuple P1={P1} m={m} m'={m_prime} n={n}: g = {g}")
                continue
            yield BetaCase(P1, index, m, m_prime, n, q, P2)
            drawn += 1


def check_beta_case(case: BetaCase) -> VerificationReport:
    start = time.perf_counter()
    chi1 = make_character(case.P1, 1, case.index)
    result = charsum_B(chi1, case.m, case.m_prime, case.n, case.q, case.P2)
    assert result.bound is not None
    return VerificationReport.bound(
        "charsum_B_bound",
        result.value,
        result.bound,
        params=asdict(case),
        passed=result.satisfied,
        elapsed_ms=_elapsed_ms(start),
    )


# Weil sums


@dataclass(frozen=True)
class WeilCase:
    p: int
    index: int
    g_numerator: tuple[int, ...]
    g_denominator: tuple[int, ...]
    f_numerator: tuple[int, ...] = (0,)
    f_denominator: tuple[int, ...] = (1,)

    def functions(self) -> tuple[RationalFunction, RationalFunction]:
        return (
            RationalFunction(self.p, self.g_numerator, self.g_denominator),
            RationalFunction(self.p, self.f_numerator, self.f_denominator),
        )


def weil_cases(
    primes: tuple[int, ...] = (11, 31, 101), samples: int = 50, seed: int = DEFAULT_SEED
) -> Iterator[WeilCase]:
    """Random g of degree 1 to 3 over 1 or a linear factor, f zero or of degree 1 to 2."""
    rng = np.random.default_rng(seed)
    for p in primes:
        drawn = 0
        for _ in range(MAX_DRAWS_PER_CASE * samples):
            if drawn == samples:
                break
            index = int(rng.integers(1, p - 1))
            degree = int(rng.integers(1, 4))
            g_numerator = (1, *(int(c) for c in rng.integers(0, p, size=degree)))
            g_denominator = (1, int(rng.integers(0, p))) if rng.random() < 0.5 else (1,)
            f_numerator: tuple[int, ...] = (0,)
            if rng.random() < 0.5:
                tail = rng.integers(0, p, size=int(rng.integers(1, 3)))
                f_numerator = (int(rng.integers(1, p)), *(int(c) for c in tail))
            case = WeilCase(p, index, g_numerator, g_denominator, f_numerator)
            g, f = case.functions()
            if f.is_constant and g.is_power(make_character(p, 1, index).order):
                logger.warning(f"Skipping degenerate Weil input p={p}: g = {g}")
                continue
            yield case
            drawn += 1


def check_weil_case(case: WeilCase) -> VerificationReport:
    start = time.perf_counter()
    g, f = case.functions()
    result = weil_sum(make_character(case.p, 1, case.index), g, f)
    assert result.bound is not None
    return VerificationReport.bound(
        "weil_bound",
        result.value,
        result.bound,
        params={"p": case.p, "chi_index": case.index, "g": str(g), "f": str(f)},
        passed=result.satisfied,
        elapsed_ms=_elapsed_ms(start),
    )


def weil_exact_reports() -> list[VerificationReport]:
    """Exact Legendre sums: sum (x / p) = 0 and sum (x(x+1) / 7) = -1."""
    reports = []
    for p, numerator, expected in ((101, (1, 0), 0), (7, (1, 1, 0), -1)):
        start = time.perf_counter()
        g = RationalFunction.polynomial(p, numerator)
        result = weil_sum(quadratic_character(p), g)
        reports.append(
            VerificationReport.compare(
                "weil_exact",
                result.value,
                expected,
                CHARSUM_EXACT_TOLERANCE,
                check=CheckKind.ABSOLUTE,
                params={"p": p, "g": str(g)},
                elapsed_ms=_elapsed_ms(start),
            )
        )
    return reports


def legendre_bound_reports(primes: tuple[int, ...] = (11, 31, 101)) -> list[VerificationReport]:
    """|B| for the Legendre symbol at the smallest admissible tuple, against 4 sqrt(P1)."""
    reports = []
    for P1 in primes:
        start = time.perf_counter()
        result = charsum_B(quadratic_character(P1), 1, 2, 1, 1, 3)
        reports.append(
            VerificationReport.bound(
                "charsum_B_legendre",
                result.value,
                result.bound or 0.0,
                params={"P1": P1},
                passed=result.satisfied,
                elapsed_ms=_elapsed_ms(start),
            )
        )
    return reports


# Congruences


@dataclass(frozen=True)
class CongruenceCase:
    q: int
    q_prime: int
    p: int
    ell: int
    m: int
    m_prime: int
    L_bound: int
    r: int


def congruence_cases(samples: int = 50, seed: int = DEFAULT_SEED) -> Iterator[CongruenceCase]:
    """Random admissible (q, q', p, l, m, m', L, r) with L up to 20 qq'."""
    rng = np.random.default_rng(seed)
    drawn = 0
    while drawn < samples:
        p = int(rng.choice(SMALL_PRIMES[:4]))
        q, q_prime = (int(v) for v in rng.integers(1, 30, size=2))
        m, m_prime = (int(v) for v in rng.integers(1, 100, size=2))
        if gcd(p, q * q_prime) != 1 or gcd(m, q) != 1 or gcd(m_prime, q_prime) != 1:
            continue
        r = int(rng.integers(3, 7))
        ell = int(rng.integers(1, r))
        L_bound = int(rng.integers(0, 20 * q * q_prime + 1))
        yield CongruenceCase(q, q_prime, p, ell, m, m_prime, L_bound, r)
        drawn += 1


def check_congruence_case(case: CongruenceCase) -> VerificationReport:
    """Enumerated count against the arithmetic-progression count of the forced class."""
    start = time.perf_counter()
    count = congruence_solution_count(
        case.q, case.q_prime, case.p, case.ell, case.m, case.m_prime, case.L_bound, case.r
    )
    residue = forced_residue(case.q, case.q_prime, case.p, case.ell, case.m, case.m_prime, case.r)
    expected = expected_solution_count(residue, case.q * case.q_prime, case.L_bound)
    return VerificationReport.compare(
        "congruence_solution_count",
        count,
        expected,
        0.5,
        check=CheckKind.ABSOLUTE,
        params={**asdict(case), "residue": residue},
        elapsed_ms=_elapsed_ms(start),
    )


def alpha_relation_reports(
    primes: tuple[int, ...] = (3, 5, 7), shifts: tuple[int, ...] = (0, 1, 7, 15)
) -> list[VerificationReport]:
    """Pair counts of the unit relation modulo p^2 against phi(p^2) or phi(p^2) - p."""
    reports = []
    for p in primes:
        for n in shifts:
            start = time.perf_counter()
            count = alpha_relation_count(p, 2, 1, 2, n)
            expected = euler_phi(p**2) - (0 if n % p == 0 else p)
            reports.append(
                VerificationReport.compare(
                    "alpha_relation_count",
                    count,
                    expected,
                    0.5,
                    check=CheckKind.ABSOLUTE,
                    params={"p": p, "ell": 2, "n": n},
                    elapsed_ms=_elapsed_ms(start),
                )
            )
    return reports
