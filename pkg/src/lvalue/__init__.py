"""
Central values of twisted L-functions.

Approximate functional equation, dyadic sums and their circle-method
decomposition, and conductor-exponent sweeps.
"""

from .afe import (
    afe_truncation,
    central_value,
    cutoff_table,
    predicted_root_number,
    reality_report,
    residual_report,
    rotated_value,
    v_weight,
    weight_agreement,
)
from .dyadic import decomposition_verify, dyadic_sum_S, window_range
from .sweep import (
    SWEEP_COLUMNS,
    central_value_reports,
    exponent_sweep,
    proposition_exponent,
    sample_characters,
)

__all__ = [
    "SWEEP_COLUMNS",
    "afe_truncation",
    "central_value",
    "central_value_reports",
    "cutoff_table",
    "decomposition_verify",
    "dyadic_sum_S",
    "exponent_sweep",
    "predicted_root_number",
    "proposition_exponent",
    "reality_report",
    "residual_report",
    "rotated_value",
    "sample_characters",
    "v_weight",
    "weight_agreement",
    "window_range",
]
