"""
Abstract interfaces implemented by the transforms package.
"""

from .test_function import PoissonTestFunction

__all__ = ["PoissonTestFunction"]
