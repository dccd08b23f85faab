"""
Core type definitions and utilities.
"""

from .numeric import (
    FOURTH_ROOTS_OF_UNITY,
    e,
    exact_phase,
    i_power,
    relative_error,
    roots_of_unity,
    snap_to_fourth_root,
)

__all__ = [
    # Exact-phase arithmetic
    "FOURTH_ROOTS_OF_UNITY",
    "e",
    "exact_phase",
    "i_power",
    "relative_error",
    "roots_of_unity",
    "snap_to_fourth_root",
]
