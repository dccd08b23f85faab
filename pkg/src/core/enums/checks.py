"""
Verification check enumerations.
"""

from enum import StrEnum


class CheckKind(StrEnum):
    """How a VerificationReport decides pass or fail."""

    RELATIVE = "relative"  # rel_err < tolerance
    ABSOLUTE = "absolute"  # abs_err < tolerance
    BOUND = "bound"  # |lhs| <= rhs
    DECAY = "decay"  # measured decay ratios within slack
