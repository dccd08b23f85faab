"""
Dirichlet characters modulo odd prime powers and products of two of them.

A character modulo p^r is fixed by an index k: chi(g^t) = e(k t / phi(p^r))
for the generator g returned by primitive_root. Values are tabulated once
through a cached discrete-log table, so evaluation is a single lookup.
"""

from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd, lcm, prod
from typing import Any

import numpy as np
import numpy.typing as npt

from src.core.constants import IDENTITY_TOLERANCE, MAX_CHARACTER_MODULUS
from src.core.exceptions.verification import (
    CharacterError,
    IndexOutOfRangeError,
    ModuliNotCoprimeError,
    PrimitivityRequiredError,
    SizeLimitError,
)
from src.core.types.numeric import roots_of_unity
from src.core.utils.validation import validate_odd_prime, validate_positive_int
from src.numtheory.modarith import primitive_root


@lru_cache(maxsize=32)
def discrete_log_table(p: int, r: int) -> npt.NDArray[np.int64]:
    """Discrete logarithms to base primitive_root(p, r), -1 on non-units.

    Args:
        p: Odd prime
        r: Positive exponent

    Returns:
        Read-only array of length p^r
    """
    modulus = p**r
    phi = (p - 1) * p ** (r - 1)
    g = primitive_root(p, r)

    table = np.full(modulus, -1, dtype=np.int64)
    power = 1
    for t in range(phi):
        table[power] = t
        power = power * g % modulus
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class CharacterComponent:
    """Character modulo p^r given by its index against the fixed generator."""

    p: int
    r: int
    index: int

    @property
    def modulus(self) -> int:
        return self.p**self.r

    @property
    def phi(self) -> int:
        return (self.p - 1) * self.p ** (self.r - 1)

    @property
    def order(self) -> int:
        """Order of the component in the character group."""
        return self.phi // gcd(self.index, self.phi)

    def values(self) -> npt.NDArray[np.complex128]:
        """Value table on [0, p^r)."""
        dlog = discrete_log_table(self.p, self.r)
        roots = roots_of_unity(self.phi)
        exponents = (self.index * np.maximum(dlog, 0)) % self.phi
        return np.where(dlog >= 0, roots[exponents], 0j)


def primitive_by_index(p: int, r: int, index: int) -> bool:
    """Primitivity of the character with the given index modulo p^r.

    For r = 1 the nontrivial characters are primitive; for r >= 2 exactly
    the indices prime to p are.
    """
    if r == 1:
        return index % (p - 1) != 0
    return index % p != 0


@dataclass(frozen=True)
class GaussSum:
    """tau(chi) = sum over beta of chi(beta) e(beta / P)."""

    value: complex
    character: "DirichletCharacter" = field(repr=False, compare=False)

    @property
    def modulus(self) -> float:
        return abs(self.value)

    def has_expected_modulus(self, tolerance: float = IDENTITY_TOLERANCE) -> bool:
        """Check |tau(chi)| = sqrt(P) for primitive characters."""
        expected = np.sqrt(self.character.modulus)
        return abs(self.modulus - expected) <= tolerance * expected


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character modulo p^r or modulo a product of two coprime prime powers.

    Attributes:
        components: One CharacterComponent per prime power of the modulus
    """

    components: tuple[CharacterComponent, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise CharacterError("A character needs at least one component")
        if self.modulus > MAX_CHARACTER_MODULUS:
            raise SizeLimitError(self.modulus, MAX_CHARACTER_MODULUS, "character modulus")

    @property
    def modulus(self) -> int:
        return prod(c.modulus for c in self.components)

    @property
    def index(self) -> int | tuple[int, ...]:
        """Index of a prime-power character, or the tuple of component indices."""
        if len(self.components) == 1:
            return self.components[0].index
        return tuple(c.index for c in self.components)

    @property
    def is_prime_power(self) -> bool:
        return len(self.components) == 1

    @property
    def p(self) -> int:
        """Prime of a prime-power character."""
        self._require_prime_power()
        return self.components[0].p

    @property
    def r(self) -> int:
        """Exponent of a prime-power character."""
        self._require_prime_power()
        return self.components[0].r

    def _require_prime_power(self) -> None:
        if not self.is_prime_power:
            raise CharacterError(f"Character modulo {self.modulus} is not a prime-power character")

    @cached_property
    def values(self) -> npt.NDArray[np.complex128]:
        """Read-only table of chi(n) for n in [0, modulus)."""
        modulus = self.modulus
        table = np.ones(modulus, dtype=np.complex128)
        n = np.arange(modulus)
        for component in self.components:
            table *= component.values()[n % component.modulus]
        table.setflags(write=False)
        return table

    @property
    def primitive(self) -> bool:
        """Primitivity from the index rule."""
        return all(primitive_by_index(c.p, c.r, c.index) for c in self.components)

    @property
    def order(self) -> int:
        return lcm(*(c.order for c in self.components))

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    @property
    def is_even(self) -> bool:
        return bool(self.values[-1].real > 0)

    def __call__(self, n: int) -> complex:
        return evaluate(self, n)

    def evaluate_many(self, n: npt.ArrayLike) -> npt.NDArray[np.complex128]:
        """chi at every entry of an integer array."""
        return self.values[np.mod(np.asarray(n, dtype=np.int64), self.modulus)]

    def is_primitive_by_definition(self) -> bool:
        """Check chi is nontrivial on 1 + (P / p)Z for every prime p dividing P."""
        modulus = self.modulus
        for component in self.components:
            step = modulus // component.p
            n = 1 + step * np.arange(component.p)
            units = n[np.gcd(n, modulus) == 1]
            if np.allclose(self.values[units % modulus], 1.0):
                return False
        return True

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(
            tuple(CharacterComponent(c.p, c.r, (-c.index) % c.phi) for c in self.components)
        )

    @cached_property
    def gauss_sum(self) -> GaussSum:
        """Gauss sum by direct summation, cached on the character."""
        value = complex(np.dot(self.values, roots_of_unity(self.modulus)))
        return GaussSum(value=value, character=self)

    def to_dict(self) -> dict[str, Any]:
        """Serialise as (p, r, index) or (P1, index1, P2, index2)."""
        if self.is_prime_power:
            c = self.components[0]
            return {"p": c.p, "r": c.r, "index": c.index}
        first, second = self.components
        return {
            "P1": first.modulus,
            "index1": first.index,
            "P2": second.modulus,
            "index2": second.index,
        }


@lru_cache(maxsize=1024)
def make_character(p: int, r: int, index: int) -> DirichletCharacter:
    """Build the character modulo p^r with chi(g^t) = e(index t / phi(p^r)).

    Args:
        p: Odd prime
        r: Positive exponent
        index: Integer in [0, phi(p^r))

    Returns:
        The character; its primitive flag follows the index rule

    Raises:
        UnsupportedModulusError: If p = 2 or p is not prime
        SizeLimitError: If p^r exceeds MAX_CHARACTER_MODULUS
        IndexOutOfRangeError: If index is outside [0, phi(p^r))
    """
    validate_odd_prime(p)
    validate_positive_int(r, "r")
    if p**r > MAX_CHARACTER_MODULUS:
        raise SizeLimitError(p**r, MAX_CHARACTER_MODULUS, "character modulus")
    phi = (p - 1) * p ** (r - 1)
    if not 0 <= index < phi:
        raise IndexOutOfRangeError(index, phi)
    return DirichletCharacter((CharacterComponent(p, r, index),))


def evaluate(chi: DirichletCharacter, n: int) -> complex:
    """chi(n mod modulus); 0 on non-units."""
    return complex(chi.values[n % chi.modulus])


def gauss_sum(chi: DirichletCharacter) -> GaussSum:
    """Gauss sum of chi, computed once per character."""
    return chi.gauss_sum


def twisted_gauss_sum(chi: DirichletCharacter, m: int) -> complex:
    """Sum over beta mod P of chi(beta) e(beta m / P)."""
    modulus = chi.modulus
    phases = roots_of_unity(modulus)[(np.arange(modulus) * (m % modulus)) % modulus]
    return complex(np.dot(chi.values, phases))


def gauss_expansion(chi: DirichletCharacter, n: int) -> complex:
    """Additive expansion (1 / tau(conj chi)) sum_alpha conj chi(alpha) e(alpha n / P).

    Equals chi(n) for every n when chi is primitive.

    Raises:
        PrimitivityRequiredError: If chi is not primitive
    """
    if not chi.primitive:
        raise PrimitivityRequiredError(chi.modulus, chi.index)
    conjugate = chi.conjugate()
    return twisted_gauss_sum(conjugate, n) / conjugate.gauss_sum.value


def compose(chi1: DirichletCharacter, chi2: DirichletCharacter) -> DirichletCharacter:
    """Product character chi(n) = chi1(n) chi2(n) modulo P1 P2.

    Args:
        chi1: Primitive prime-power character modulo P1
        chi2: Primitive prime-power character modulo P2

    Returns:
        Primitive character modulo P1 P2

    Raises:
        ModuliNotCoprimeError: If P1 and P2 share a prime
        PrimitivityRequiredError: If either factor is imprimitive
    """
    for chi in (chi1, chi2):
        chi._require_prime_power()
    if gcd(chi1.modulus, chi2.modulus) != 1:
        raise ModuliNotCoprimeError(chi1.modulus, chi2.modulus)
    for chi in (chi1, chi2):
        if not chi.primitive:
            raise PrimitivityRequiredError(chi.modulus, chi.index)
    return DirichletCharacter(chi1.components + chi2.components)


def characters_mod(p: int, r: int) -> Iterator[DirichletCharacter]:
    """All phi(p^r) characters modulo p^r in index order."""
    phi = (p - 1) * p ** (r - 1)
    for index in range(phi):
        yield make_character(p, r, index)


def primitive_characters(p: int, r: int) -> Iterator[DirichletCharacter]:
    """Primitive characters modulo p^r in index order."""
    phi = (p - 1) * p ** (r - 1)
    for index in range(phi):
        if primitive_by_index(p, r, index):
            yield make_character(p, r, index)


def quadratic_character(p: int) -> DirichletCharacter:
    """Legendre symbol modulo p."""
    return make_character(p, 1, (p - 1) // 2)
