"""
Rational functions over GF(p) with the divisor data the Weil bound needs.

Coefficients are stored highest degree first, reduced into [0, p). Zeros and
poles are counted over the algebraic closure: a distinct irreducible factor
of degree d contributes d distinct points, and infinity is a zero or pole
whenever the numerator and denominator degrees differ.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np
import numpy.typing as npt
from sympy import Poly, Symbol
from sympy.polys.polyerrors import ExactQuotientFailed

from src.core.exceptions.verification import ValidationError
from src.core.utils.validation import validate_odd_prime

X = Symbol("x")

Coefficients = tuple[int, ...]


def _strip(coefficients: Coefficients, p: int) -> Coefficients:
    reduced = [c % p for c in coefficients]
    while len(reduced) > 1 and reduced[0] == 0:
        reduced.pop(0)
    return tuple(reduced) if reduced else (0,)


def _coefficients(poly: Poly, p: int) -> Coefficients:
    return _strip(tuple(int(c) for c in poly.all_coeffs()), p)


@dataclass(frozen=True)
class Factorization:
    """Irreducible factorisation of a reduced g = constant * N / D.

    Each entry is (degree, multiplicity) of one distinct irreducible factor.
    """

    constant: int
    numerator: tuple[tuple[int, int], ...]
    denominator: tuple[tuple[int, int], ...]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.numerator + self.denominator)


@dataclass(frozen=True)
class RationalFunction:
    """g(x) = numerator(x) / denominator(x) over GF(p).

    Attributes:
        p: Odd prime
        numerator: Coefficients, highest degree first
        denominator: Coefficients, highest degree first; defaults to 1
    """

    p: int
    numerator: Coefficients
    denominator: Coefficients = (1,)

    def __post_init__(self) -> None:
        """Reduce coefficients modulo p.

        Raises:
            UnsupportedModulusError: If p is not an odd prime
            ValidationError: If the denominator is the zero polynomial
        """
        validate_odd_prime(self.p)
        object.__setattr__(self, "numerator", _strip(tuple(self.numerator), self.p))
        object.__setattr__(self, "denominator", _strip(tuple(self.denominator), self.p))
        if self.denominator == (0,):
            raise ValidationError("Denominator of a rational function cannot be zero")

    @classmethod
    def polynomial(cls, p: int, coefficients: Coefficients) -> "RationalFunction":
        return cls(p, coefficients)

    @classmethod
    def zero(cls, p: int) -> "RationalFunction":
        return cls(p, (0,))

    def _poly(self, coefficients: Coefficients) -> Poly:
        return Poly(list(coefficients), X, modulus=self.p)

    @property
    def is_zero(self) -> bool:
        return self.numerator == (0,)

    @cached_property
    def reduced(self) -> "RationalFunction":
        """Same function with the common factor cancelled and a monic denominator."""
        if self.is_zero:
            return RationalFunction(self.p, (0,))
        numerator, denominator = self._poly(self.numerator), self._poly(self.denominator)
        common = numerator.gcd(denominator)
        try:
            numerator, denominator = numerator.exquo(common), denominator.exquo(common)
        except ExactQuotientFailed as e:
            raise ValidationError(f"Cannot cancel common factor of {self}: {e}") from e
        lead = int(denominator.LC()) % self.p
        scale = pow(lead, -1, self.p)
        return RationalFunction(
            self.p,
            tuple(c * scale for c in _coefficients(numerator, self.p)),
            tuple(c * scale for c in _coefficients(denominator, self.p)),
        )

    @property
    def numerator_degree(self) -> int:
        """Degree of the numerator, -1 for the zero function."""
        return -1 if self.is_zero else len(self.numerator) - 1

    @property
    def denominator_degree(self) -> int:
        return len(self.denominator) - 1

    @property
    def is_constant(self) -> bool:
        g = self.reduced
        return g.numerator_degree <= 0 and g.denominator_degree == 0

    @cached_property
    def factorization(self) -> Factorization:
        """Factor the reduced function over GF(p).

        Raises:
            ValidationError: If the function is identically zero
        """
        if self.is_zero:
            raise ValidationError("The zero function has no factorisation")
        g = self.reduced
        constant, numerator = g._poly(g.numerator).factor_list()
        _, denominator = g._poly(g.denominator).factor_list()
        return Factorization(
            constant=int(constant) % self.p,
            numerator=tuple((int(f.degree()), int(m)) for f, m in numerator),
            denominator=tuple((int(f.degree()), int(m)) for f, m in denominator),
        )

    def zeros_and_poles(self) -> int:
        """Number of distinct zeros and poles over the closure, infinity included."""
        factors = self.factorization
        finite = sum(d for d, _ in factors.numerator) + sum(d for d, _ in factors.denominator)
        g = self.reduced
        return finite + int(g.numerator_degree != g.denominator_degree)

    def pole_count(self) -> int:
        """Number of distinct poles over the closure, infinity included."""
        if self.is_zero:
            return 0
        g = self.reduced
        finite = sum(d for d, _ in self.factorization.denominator)
        return finite + int(g.numerator_degree > g.denominator_degree)

    def pole_degree(self) -> int:
        """Degree of the polar divisor: total pole multiplicity, infinity included."""
        if self.is_zero:
            return 0
        g = self.reduced
        return g.denominator_degree + max(0, g.numerator_degree - g.denominator_degree)

    def regular_at_infinity(self) -> bool:
        """Check whether infinity is neither a zero nor a pole."""
        g = self.reduced
        return not g.is_zero and g.numerator_degree == g.denominator_degree

    def finite_at_infinity(self) -> bool:
        """Check whether infinity is not a pole."""
        g = self.reduced
        return g.numerator_degree <= g.denominator_degree

    def is_power(self, k: int) -> bool:
        """Check whether g is a constant times a k-th power of a rational function."""
        if k <= 1 or self.is_constant:
            return True
        return all(m % k == 0 for m in self.factorization.multiplicities)

    def evaluate_all(self) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
        """Numerator and denominator values at every x in [0, p)."""
        x = np.arange(self.p, dtype=np.int64)
        return _horner(self.numerator, x, self.p), _horner(self.denominator, x, self.p)

    def values(self) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.bool_]]:
        """g(x) mod p at every x and the mask of points where g is defined."""
        numerator, denominator = self.evaluate_all()
        defined = denominator != 0
        inverse = np.zeros_like(denominator)
        inverse[defined] = [pow(int(d), -1, self.p) for d in denominator[defined]]
        return (numerator * inverse) % self.p, defined

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.p, "numerator": list(self.numerator), "denominator": list(self.denominator)}

    def __str__(self) -> str:
        numerator = self._poly(self.numerator).as_expr()
        if self.denominator == (1,):
            return f"{numerator} (mod {self.p})"
        return f"({numerator}) / ({self._poly(self.denominator).as_expr()}) (mod {self.p})"


def _horner(coefficients: Coefficients, x: npt.NDArray[np.int64], p: int) -> npt.NDArray[np.int64]:
    values = np.zeros_like(x)
    for c in coefficients:
        values = (values * x + c) % p
    return values
