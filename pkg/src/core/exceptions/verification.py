"""
Custom exception hierarchy for the verification library.

This module defines domain-specific exceptions for better error handling.
"""


class VerificationException(Exception):
    """Base exception for all verification-related errors."""

    pass


class ValidationError(VerificationException):
    """Raised when input validation fails."""

    pass


class ConfigError(VerificationException):
    """Raised when a run configuration is invalid."""

    pass


class SizeLimitError(VerificationException):
    """Raised when a request exceeds a desk-scale resource cap."""

    def __init__(self, requested: int | float, limit: int | float, what: str = "size"):
        self.requested = requested
        self.limit = limit
        self.what = what
        super().__init__(f"{what} {requested} exceeds limit {limit}")


class ArithmeticDomainError(VerificationException):
    """Raised when modular arithmetic is asked for something undefined."""

    pass


class NotInvertibleError(ArithmeticDomainError):
    """Raised when a residue has no inverse modulo m."""

    def __init__(self, value: int, modulus: int):
        self.value = value
        self.modulus = modulus
        super().__init__(f"{value} is not invertible modulo {modulus}")


class ModuliNotCoprimeError(ArithmeticDomainError):
    """Raised when a CRT combination is requested for non-coprime moduli."""

    def __init__(self, first: int, second: int):
        self.first = first
        self.second = second
        super().__init__(f"Moduli {first} and {second} are not coprime")


class UnsupportedModulusError(ArithmeticDomainError):
    """Raised for moduli outside the supported family (odd prime powers)."""

    def __init__(self, modulus: int, reason: str):
        self.modulus = modulus
        self.reason = reason
        super().__init__(f"Unsupported modulus {modulus}: {reason}")


class CharacterError(VerificationException):
    """Raised when a Dirichlet character cannot be built or used."""

    pass


class IndexOutOfRangeError(CharacterError):
    """Raised when a character index is outside [0, phi(modulus))."""

    def __init__(self, index: int, order: int):
        self.index = index
        self.order = order
        super().__init__(f"Character index {index} outside [0, {order})")


class PrimitivityRequiredError(CharacterError):
    """Raised when an operation needs a primitive character."""

    def __init__(self, modulus: int, index: object):
        self.modulus = modulus
        self.index = index
        super().__init__(f"Character {index} modulo {modulus} is not primitive")


class NumericalError(VerificationException):
    """Raised when a numerical method cannot reach its tolerance."""

    pass


class NonConvergentError(NumericalError):
    """Raised when a truncated series keeps too much mass in its tail."""

    pass


class QuadratureFailureError(NumericalError):
    """Raised when a quadrature error estimate stays above tolerance."""

    def __init__(self, error_estimate: float, tolerance: float, what: str = "quadrature"):
        self.error_estimate = error_estimate
        self.tolerance = tolerance
        super().__init__(
            f"{what} failed: error estimate {error_estimate:.3e} exceeds {tolerance:.3e}"
        )


class TruncationInsufficientError(NumericalError):
    """Raised when doubling a truncation moves a sum beyond tolerance."""

    def __init__(self, movement: float, tolerance: float, truncation: int):
        self.movement = movement
        self.tolerance = tolerance
        self.truncation = truncation
        super().__init__(
            f"Truncation T={truncation} insufficient: doubling moved the sum by "
            f"{movement:.3e} (allowed {tolerance:.3e})"
        )


class StationaryPhaseError(VerificationException):
    """Raised when the stationary point structure is not the expected one."""

    pass


class NoStationaryPointError(StationaryPhaseError):
    """Raised when f' does not vanish inside the interval."""

    pass


class MultipleStationaryPointsError(StationaryPhaseError):
    """Raised when f' vanishes more than once inside the interval."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"Expected a unique stationary point, found {count}")


class PreconditionViolatedError(VerificationException):
    """Raised when the arguments of an identity fall outside its hypotheses."""

    def __init__(self, operation: str, reason: str):
        self.operation = operation
        self.reason = reason
        super().__init__(f"{operation}: {reason}")


class DegenerateFunctionError(VerificationException):
    """Raised when a rational function is a power, so no square-root bound applies."""

    pass


class RootNumberInconsistentError(VerificationException):
    """Raised when no unimodular root number reconciles the functional equation."""

    def __init__(self, epsilon_modulus: float):
        self.epsilon_modulus = epsilon_modulus
        super().__init__(f"Solved root number has modulus {epsilon_modulus:.12f}, expected 1")


class BoundViolationError(VerificationException):
    """Raised when a bound asserted on every call is exceeded."""

    def __init__(self, value: float, bound: float, what: str):
        self.value = value
        self.bound = bound
        self.what = what
        super().__init__(f"{what}: |value| = {value:.6e} exceeds bound {bound:.6e}")
