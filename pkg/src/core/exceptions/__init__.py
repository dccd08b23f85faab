"""
Exception hierarchy for the verification library.
"""

from .verification import (
    ArithmeticDomainError,
    BoundViolationError,
    CharacterError,
    ConfigError,
    DegenerateFunctionError,
    IndexOutOfRangeError,
    ModuliNotCoprimeError,
    MultipleStationaryPointsError,
    NoStationaryPointError,
    NonConvergentError,
    NotInvertibleError,
    NumericalError,
    PreconditionViolatedError,
    PrimitivityRequiredError,
    QuadratureFailureError,
    RootNumberInconsistentError,
    SizeLimitError,
    StationaryPhaseError,
    TruncationInsufficientError,
    UnsupportedModulusError,
    ValidationError,
    VerificationException,
)

__all__ = [
    "VerificationException",
    "ValidationError",
    "ConfigError",
    "SizeLimitError",
    "ArithmeticDomainError",
    "NotInvertibleError",
    "ModuliNotCoprimeError",
    "UnsupportedModulusError",
    "CharacterError",
    "IndexOutOfRangeError",
    "PrimitivityRequiredError",
    "NumericalError",
    "NonConvergentError",
    "QuadratureFailureError",
    "TruncationInsufficientError",
    "StationaryPhaseError",
    "NoStationaryPointError",
    "MultipleStationaryPointsError",
    "PreconditionViolatedError",
    "DegenerateFunctionError",
    "RootNumberInconsistentError",
    "BoundViolationError",
]
