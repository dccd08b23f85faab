"""
Solution counts of the congruences left after the second Poisson summation.
"""

from math import ceil, gcd

import numpy as np
from loguru import logger

from src.core.exceptions.verification import BoundViolationError, PreconditionViolatedError
from src.core.utils.decorators import log_verification
from src.core.utils.validation import validate_odd_prime, validate_positive_int
from src.numtheory.modarith import euler_phi, inverse_or_zero


def forced_residue(q: int, q_prime: int, p: int, ell: int, m: int, m_prime: int, r: int) -> int:
    """n0 in [0, qq') with n = n0 (mod qq') the only admissible class.

    From -p^r (p^2l)^-1 m^-1 p^l q' + p^r (p^2l)^-1 m'^-1 p^l q + n = 0 (mod qq'),
    the first inverses taken modulo q and the second modulo q'.
    """
    Y = p**r * inverse_or_zero(p ** (2 * ell), q) * inverse_or_zero(m, q) * p**ell % q
    Y_prime = p**r * inverse_or_zero(p ** (2 * ell), q_prime) * inverse_or_zero(m_prime, q_prime) * p**ell % q_prime
    return (Y * q_prime - Y_prime * q) % (q * q_prime)


@log_verification
def congruence_solution_count(
    q: int, q_prime: int, p: int, ell: int, m: int, m_prime: int, L_bound: int, r: int
) -> int:
    """Count signed n with |n| <= L_bound in the admissible class modulo qq'.

    Asserts the count is at most 2 ceil(L_bound / qq') + 1.

    Raises:
        PreconditionViolatedError: If p divides qq', or m, m' are not units modulo q, q'
        BoundViolationError: If the count exceeds the bound
    """
    validate_odd_prime(p)
    for value, name in ((q, "q"), (q_prime, "q'"), (r, "r")):
        validate_positive_int(value, name)
    if gcd(p, q * q_prime) != 1:
        raise PreconditionViolatedError("congruence_solution_count", f"{p} divides qq' = {q * q_prime}")
    if gcd(m, q) != 1 or gcd(m_prime, q_prime) != 1:
        raise PreconditionViolatedError("congruence_solution_count", "m and m' must be units modulo q and q'")

    modulus = q * q_prime
    residue = forced_residue(q, q_prime, p, ell, m, m_prime, r)
    n = np.arange(-L_bound, L_bound + 1, dtype=np.int64)
    count = int(np.count_nonzero((n - residue) % modulus == 0))

    bound = 2 * ceil(L_bound / modulus) + 1
    if count > bound:
        raise BoundViolationError(count, bound, "congruence solution count")
    logger.debug(f"{count} solutions modulo {modulus} with |n| <= {L_bound} (residue {residue})")
    return count


def expected_solution_count(residue: int, modulus: int, L_bound: int) -> int:
    """Closed-form count of n = residue (mod modulus) with |n| <= L_bound."""
    r0 = residue % modulus
    return (L_bound - r0) // modulus + (L_bound + r0) // modulus + 1


def alpha_relation_count(p: int, ell: int, q: int, q_prime: int, n: int) -> int:
    """Count unit pairs (alpha, alpha') modulo p^l with alpha^-1 q' + alpha'^-1 q + n = 0.

    Every alpha with n + alpha^-1 q' a unit fixes alpha' uniquely, so the
    count is phi(p^l) when p | n and phi(p^l) - p^(l-1) otherwise.

    Raises:
        PreconditionViolatedError: If q or q' is divisible by p
    """
    validate_odd_prime(p)
    validate_positive_int(ell, "ell")
    if q % p == 0 or q_prime % p == 0:
        raise PreconditionViolatedError("alpha_relation_count", f"q and q' must be units modulo {p}")

    modulus = p**ell
    units = np.array([a for a in range(modulus) if a % p], dtype=np.int64)
    inverses = np.array([pow(int(a), -1, modulus) for a in units], dtype=np.int64)
    # alpha'^-1 = -(n + alpha^-1 q') q^-1 must itself be a unit
    remainder = (n + inverses * q_prime) % modulus
    count = int(np.count_nonzero(remainder % p != 0))

    expected = euler_phi(modulus) - (0 if n % p == 0 else p ** (ell - 1))
    if count != expected:
        raise BoundViolationError(count, expected, "alpha relation count")
    return count
