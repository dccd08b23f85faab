"""
Brute-force mixed character sums over GF(p) against the Weil bound.
"""

from math import sqrt

import numpy as np
import numpy.typing as npt

from src.charsums.rational import RationalFunction
from src.core.constants import ROUNDING_PER_TERM, WEIL_MAX_PRIME
from src.core.exceptions.verification import (
    DegenerateFunctionError,
    PreconditionViolatedError,
    SizeLimitError,
)
from src.core.models.charsum import CharSumResult
from src.core.utils.decorators import log_verification
from src.core.types.numeric import exact_phase
from src.numtheory.characters import DirichletCharacter


def multiplicative_part(chi: DirichletCharacter, g: RationalFunction) -> npt.NDArray[np.complex128]:
    """chi(g(x)) for every x mod p, 0 at zeros and poles of g."""
    numerator, denominator = g.evaluate_all()
    return chi.evaluate_many(numerator) * np.conj(chi.evaluate_many(denominator))


def weil_bound(g: RationalFunction, f: RationalFunction) -> float:
    """(n1 + n2 - 2 + deg (f)_inf) sqrt(p), floored at 0."""
    complexity = g.zeros_and_poles() + f.pole_count() - 2 + f.pole_degree()
    return max(complexity, 0) * sqrt(g.p)


@log_verification
def weil_sum(
    chi: DirichletCharacter, g: RationalFunction, f: RationalFunction | None = None
) -> CharSumResult:
    """S = sum over x mod p of chi(g(x)) e_p(f(x)).

    Points where g vanishes or has a pole contribute 0; poles of f skip the
    term. The bound holds for the sum over the projective line, so when
    infinity is regular for both g and f the affine sum may miss it by one
    unit-modulus term.

    Args:
        chi: Character modulo the prime p
        g: Rational function over GF(p)
        f: Rational function over GF(p); zero when None

    Returns:
        CharSumResult with the Weil bound and satisfied = |S| <= bound
        (plus the term at infinity and ROUNDING_PER_TERM slack per term)

    Raises:
        PreconditionViolatedError: If chi, g and f do not share the prime p
        SizeLimitError: If p exceeds WEIL_MAX_PRIME
        DegenerateFunctionError: If g is a constant times an ord(chi)-th power and f is constant
    """
    p = g.p
    f = f if f is not None else RationalFunction.zero(p)
    if not (chi.is_prime_power and chi.modulus == p and f.p == p):
        raise PreconditionViolatedError("weil_sum", f"chi, g and f must all live modulo {p}")
    if p > WEIL_MAX_PRIME:
        raise SizeLimitError(p, WEIL_MAX_PRIME, "Weil sum prime")
    if g.is_zero:
        raise DegenerateFunctionError("g is identically zero")
    if f.is_constant and g.is_power(chi.order):
        raise DegenerateFunctionError(f"g = {g} is a constant times a {chi.order}-th power")

    terms = multiplicative_part(chi, g)
    f_values, f_defined = f.values()
    terms = np.where(f_defined, terms * exact_phase(f_values, p), 0)
    value = complex(np.sum(terms))

    bound = weil_bound(g, f)
    infinity_term = int(g.regular_at_infinity() and f.finite_at_infinity())
    slack = infinity_term + ROUNDING_PER_TERM * p
    return CharSumResult(
        value=value,
        modulus=p,
        bound=bound,
        satisfied=abs(value) <= bound + slack,
        notes={
            "n1": g.zeros_and_poles(),
            "n2": f.pole_count(),
            "deg_f_inf": f.pole_degree(),
            "order": chi.order,
            "infinity_term": infinity_term,
        },
    )
