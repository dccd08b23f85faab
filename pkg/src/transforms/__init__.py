"""
Analytic identities and estimates: smooth windows, oscillatory quadrature,
Poisson and Voronoi summation, the circle-method delta expansion and
stationary phase.
"""

from .delta import delta_expand, delta_verify, farey_pairs
from .poisson import GaussianTestFunction, WindowTestFunction, poisson_verify
from .quadrature import QuadratureResult, oscillatory_quadrature
from .stationary import (
    PhaseFunction,
    StationaryPhaseEstimate,
    nonstationary_bound_check,
    stationary_phase_decay,
    stationary_phase_main_term,
    stationary_phase_verify,
)
from .voronoi import (
    bessel_transform_H,
    bessel_transform_table,
    default_truncation,
    voronoi_J_bound_check,
    voronoi_verify,
    voronoi_window,
)
from .windows import SmoothWindow

__all__ = [
    "GaussianTestFunction",
    "PhaseFunction",
    "QuadratureResult",
    "SmoothWindow",
    "StationaryPhaseEstimate",
    "WindowTestFunction",
    "bessel_transform_H",
    "bessel_transform_table",
    "default_truncation",
    "delta_expand",
    "delta_verify",
    "farey_pairs",
    "nonstationary_bound_check",
    "stationary_phase_decay",
    "oscillatory_quadrature",
    "poisson_verify",
    "stationary_phase_main_term",
    "stationary_phase_verify",
    "voronoi_J_bound_check",
    "voronoi_verify",
    "voronoi_window",
]
