"""
Complete character sums: the first Poisson sum and its closed form, the
sums A and B after Cauchy-Schwarz, mixed Weil sums over GF(p) and the
congruence counts that follow them.
"""

from .congruence import alpha_relation_count, congruence_solution_count, expected_solution_count
from .rational import RationalFunction
from .sums import (
    beta_function,
    charsum_A,
    charsum_B,
    charsum_C,
    expected_magnitude_A,
    is_coherent_tuple,
    poisson_closed_form,
    poisson_sum_table,
)
from .sweeps import (
    AlphaCase,
    BetaCase,
    CongruenceCase,
    GaussGridCase,
    WeilCase,
    alpha_cases,
    beta_cases,
    check_alpha_case,
    check_beta_case,
    check_congruence_case,
    check_gauss_grid_case,
    check_weil_case,
    congruence_cases,
    gauss_grid_cases,
    weil_cases,
)
from .weil import weil_bound, weil_sum

__all__ = [
    "AlphaCase",
    "BetaCase",
    "CongruenceCase",
    "GaussGridCase",
    "RationalFunction",
    "WeilCase",
    "alpha_cases",
    "alpha_relation_count",
    "beta_cases",
    "beta_function",
    "charsum_A",
    "charsum_B",
    "charsum_C",
    "check_alpha_case",
    "check_beta_case",
    "check_congruence_case",
    "check_gauss_grid_case",
    "check_weil_case",
    "congruence_cases",
    "congruence_solution_count",
    "expected_magnitude_A",
    "expected_solution_count",
    "gauss_grid_cases",
    "is_coherent_tuple",
    "poisson_closed_form",
    "poisson_sum_table",
    "weil_bound",
    "weil_sum",
    "weil_cases",
]
