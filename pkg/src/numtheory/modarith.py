"""
Exact modular arithmetic primitives.

Residues, inverses, CRT combination and primitive roots of odd prime
powers. Python integers keep every intermediate product exact; moduli are
capped at MAX_MODULUS.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from sympy import factorint, totient
from sympy.ntheory import n_order

from src.core.exceptions.verification import (
    ModuliNotCoprimeError,
    NotInvertibleError,
    UnsupportedModulusError,
    ValidationError,
)
from src.core.utils.validation import validate_modulus, validate_odd_prime, validate_positive_int


@dataclass(frozen=True)
class Residue:
    """An element of Z/mZ, stored as its least non-negative representative."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        validate_modulus(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other: "Residue | int") -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValidationError(
                    f"Residues modulo {self.modulus} and {other.modulus} cannot be combined"
                )
            return other.value
        return other

    def __add__(self, other: "Residue | int") -> "Residue":
        return Residue(self.value + self._coerce(other), self.modulus)

    def __sub__(self, other: "Residue | int") -> "Residue":
        return Residue(self.value - self._coerce(other), self.modulus)

    def __mul__(self, other: "Residue | int") -> "Residue":
        return Residue(self.value * self._coerce(other), self.modulus)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent: int) -> "Residue":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> "Residue":
        """Multiplicative inverse; raises NotInvertibleError on non-units."""
        return mod_inverse(self.value, self.modulus)

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1


def mod_inverse(a: int, m: int) -> Residue:
    """Inverse of a modulo m.

    Args:
        a: Integer to invert
        m: Positive modulus

    Returns:
        Residue x with a * x = 1 (mod m); modulo 1 every integer inverts to 0

    Raises:
        NotInvertibleError: If gcd(a, m) > 1
    """
    validate_modulus(m, "m")
    if m == 1:
        return Residue(0, 1)
    try:
        return Residue(pow(a, -1, m), m)
    except ValueError as e:
        raise NotInvertibleError(a, m) from e


def inverse_or_zero(a: int, m: int) -> int:
    """Inverse of a modulo m, with the convention 0 for m = 1."""
    return mod_inverse(a, m).value


def crt_combine(r1: Residue, r2: Residue) -> Residue:
    """Combine residues modulo coprime m1 and m2 into one modulo m1 * m2.

    Raises:
        ModuliNotCoprimeError: If gcd(m1, m2) > 1
    """
    m1, m2 = r1.modulus, r2.modulus
    if gcd(m1, m2) != 1:
        raise ModuliNotCoprimeError(m1, m2)
    lift = ((r2.value - r1.value) * mod_inverse(m1, m2).value) % m2
    return Residue(r1.value + m1 * lift, m1 * m2)


def euler_phi(m: int) -> int:
    """Euler's totient of m."""
    validate_positive_int(m, "m")
    return int(totient(m))


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/mZ)^x.

    Raises:
        NotInvertibleError: If a is not a unit modulo m
    """
    validate_modulus(m, "m")
    if gcd(a, m) != 1:
        raise NotInvertibleError(a, m)
    if m == 1:
        return 1
    return int(n_order(a % m, m))


def has_full_order(g: int, modulus: int, group_order: int) -> bool:
    """Check g^(group_order / l) != 1 for every prime l dividing group_order."""
    if pow(g, group_order, modulus) != 1:
        return False
    return all(pow(g, group_order // ell, modulus) != 1 for ell in factorint(group_order))


@lru_cache(maxsize=256)
def primitive_root(p: int, r: int) -> int:
    """Smallest-lift generator of the cyclic group (Z/p^rZ)^x.

    The least primitive root g modulo p is lifted to g + p when
    g^(p-1) = 1 (mod p^2); the result then generates modulo every p^r.

    Args:
        p: Odd prime
        r: Positive exponent

    Returns:
        Generator of (Z/p^rZ)^x

    Raises:
        UnsupportedModulusError: If p = 2 or p is not prime
    """
    validate_odd_prime(p)
    validate_positive_int(r, "r")
    validate_modulus(p**r, "p^r")

    g = next(c for c in range(2, p + 1) if has_full_order(c, p, p - 1))
    if r >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    if not has_full_order(g, p**r, (p - 1) * p ** (r - 1)):
        raise UnsupportedModulusError(p**r, f"no generator found from {g}")
    return g
