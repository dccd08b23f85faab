"""
Numeric helpers for exact-phase complex arithmetic.

Additive characters e(x) = exp(2 pi i x) are evaluated from integer phase
numerators whenever the denominator is known, so every term of a complete
sum has modulus exactly 1 (up to the rounding of a single table entry).
Quarter turns are stored exactly.
"""

from functools import lru_cache

import numpy as np
import numpy.typing as npt

from src.core.constants import RELATIVE_ERROR_FLOOR, ROOT_OF_UNITY_SNAP

FOURTH_ROOTS_OF_UNITY: tuple[complex, ...] = (1 + 0j, 1j, -1 + 0j, -1j)


@lru_cache(maxsize=64)
def roots_of_unity(n: int) -> npt.NDArray[np.complex128]:
    """Table of e(j / n) for j in [0, n), read-only.

    Args:
        n: Order of the roots

    Returns:
        Complex array whose entry j is exp(2 pi i j / n)
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    table = np.exp(2j * np.pi * np.arange(n) / n)
    # Exact values at multiples of a quarter turn
    if n % 4 == 0:
        quarter = n // 4
        for turn, value in enumerate(FOURTH_ROOTS_OF_UNITY):
            table[turn * quarter] = value
    elif n % 2 == 0:
        table[0], table[n // 2] = 1.0, -1.0
    else:
        table[0] = 1.0
    table.setflags(write=False)
    return table


def exact_phase(
    numerators: npt.ArrayLike, denominator: int
) -> npt.NDArray[np.complex128] | complex:
    """Evaluate e(a / denominator) for integer numerators a.

    Args:
        numerators: Integer or integer array of phase numerators
        denominator: Positive phase denominator

    Returns:
        e(a / denominator), reduced exactly modulo the denominator
    """
    table = roots_of_unity(denominator)
    reduced = np.mod(np.asarray(numerators, dtype=np.int64), denominator)
    result = table[reduced]
    if np.ndim(result) == 0:
        return complex(result)
    return result


def e(x: npt.ArrayLike) -> npt.NDArray[np.complex128] | complex:
    """Additive character e(x) = exp(2 pi i x) for real x."""
    result = np.exp(2j * np.pi * np.asarray(x, dtype=np.float64))
    if np.ndim(result) == 0:
        return complex(result)
    return result


def relative_error(lhs: complex, rhs: complex, floor: float = RELATIVE_ERROR_FLOOR) -> float:
    """Relative discrepancy |lhs - rhs| / max(|lhs|, |rhs|, floor)."""
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), floor)


def snap_to_fourth_root(value: complex, tolerance: float = ROOT_OF_UNITY_SNAP) -> complex | None:
    """Return the fourth root of unity within tolerance of value, if any."""
    for root in FOURTH_ROOTS_OF_UNITY:
        if abs(value - root) < tolerance:
            return root
    return None


def i_power(k: int) -> complex:
    """Exact value of i^k."""
    return FOURTH_ROOTS_OF_UNITY[k % 4]
