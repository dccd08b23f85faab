"""
Core enumerations for the verification library.

This module provides centralized enumerations for domain concepts
like window shapes, contour weights, check kinds and CLI commands.
"""

from .checks import CheckKind
from .commands import Command
from .contour_weights import ContourWeight
from .windows import WindowKind

__all__ = [
    "CheckKind",
    "Command",
    "ContourWeight",
    "WindowKind",
]
