"""
Validation utilities for numeric arguments.

Provides consistent validation across the library.
"""

from sympy import isprime

from src.core.constants import MAX_MODULUS
from src.core.exceptions.verification import SizeLimitError, UnsupportedModulusError, ValidationError


def validate_positive(value: float, param_name: str) -> float:
    """Validate that a numeric value is positive.

    Args:
        value: Value to validate
        param_name: Parameter name for error messages

    Returns:
        The validated value

    Raises:
        ValidationError: If value is not positive
    """
    if value <= 0:
        raise ValidationError(f"{param_name} must be positive, got {value}")
    return value


def validate_positive_int(value: int, param_name: str) -> int:
    """Validate that a value is a positive integer.

    Args:
        value: Value to validate
        param_name: Parameter name for error messages

    Returns:
        The validated integer

    Raises:
        ValidationError: If value is not an integer or not positive
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{param_name} must be an integer, got {type(value).__name__}")
    if value <= 0:
        raise ValidationError(f"{param_name} must be positive, got {value}")
    return value


def validate_modulus(modulus: int, param_name: str = "modulus") -> int:
    """Validate a modulus against the exact-arithmetic cap.

    Raises:
        ValidationError: If modulus is not a positive integer
        SizeLimitError: If modulus exceeds MAX_MODULUS
    """
    validate_positive_int(modulus, param_name)
    if modulus > MAX_MODULUS:
        raise SizeLimitError(modulus, MAX_MODULUS, param_name)
    return modulus


def validate_odd_prime(p: int, param_name: str = "p") -> int:
    """Validate that p is an odd prime.

    Args:
        p: Candidate prime
        param_name: Parameter name for error messages

    Returns:
        The validated prime

    Raises:
        UnsupportedModulusError: If p is 2 or not prime
    """
    validate_positive_int(p, param_name)
    if p == 2:
        raise UnsupportedModulusError(p, "p = 2 is outside the odd-prime family")
    if not isprime(p):
        raise UnsupportedModulusError(p, f"{param_name} must be an odd prime")
    return p


def validate_in_range(value: float, low: float, high: float, param_name: str) -> float:
    """Validate low <= value <= high.

    Raises:
        ValidationError: If value lies outside the closed interval
    """
    if value < low or value > high:
        raise ValidationError(f"{param_name} must be between {low} and {high}, got {value}")
    return value


def validate_interval(a: float, b: float) -> tuple[float, float]:
    """Validate a non-degenerate interval a < b.

    Raises:
        ValidationError: If a >= b
    """
    if not a < b:
        raise ValidationError(f"Interval must satisfy a < b, got [{a}, {b}]")
    return a, b
