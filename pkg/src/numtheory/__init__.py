"""
Number-theoretic building blocks: modular arithmetic, Dirichlet characters
and coefficients of level-one eigenforms.
"""

from .characters import (
    DirichletCharacter,
    GaussSum,
    characters_mod,
    compose,
    evaluate,
    gauss_expansion,
    gauss_sum,
    make_character,
    primitive_by_index,
    primitive_characters,
    quadratic_character,
    twisted_gauss_sum,
)
from .forms import (
    CuspForm,
    delta_coefficients,
    divisor_counts,
    hecke_relation_defect,
    normalized_coefficients,
    rankin_selberg_check,
    rankin_selberg_sum,
)
from .modarith import Residue, crt_combine, euler_phi, mod_inverse, multiplicative_order, primitive_root

__all__ = [
    "CuspForm",
    "DirichletCharacter",
    "GaussSum",
    "Residue",
    "characters_mod",
    "compose",
    "crt_combine",
    "delta_coefficients",
    "divisor_counts",
    "euler_phi",
    "evaluate",
    "gauss_expansion",
    "gauss_sum",
    "hecke_relation_defect",
    "make_character",
    "mod_inverse",
    "multiplicative_order",
    "normalized_coefficients",
    "primitive_by_index",
    "primitive_characters",
    "primitive_root",
    "quadratic_character",
    "rankin_selberg_check",
    "rankin_selberg_sum",
    "twisted_gauss_sum",
]
