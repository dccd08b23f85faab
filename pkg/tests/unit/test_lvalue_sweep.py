"""
Unit tests for the conductor-exponent sweep.
"""

import numpy as np
import pandas as pd
import pytest

from src.core.enums import ContourWeight
from src.core.exceptions.verification import SizeLimitError
from src.lvalue.afe import afe_truncation
from src.lvalue.sweep import (
    SWEEP_COLUMNS,
    exponent_sweep,
    proposition_exponent,
    sample_characters,
)
from src.numtheory.forms import CuspForm


@pytest.fixture(scope="module")
def delta() -> CuspForm:
    """Delta covering conductor 81 with the unit contour weight."""
    return CuspForm(12, cache_bound=afe_truncation(81, 12, ContourWeight.UNIT))


@pytest.fixture(scope="module")
def sweep(delta: CuspForm) -> pd.DataFrame:
    """p = 3, r = 1..3 with 10 samples each."""
    return exponent_sweep(delta, 3, [1, 2, 3], 10)


class TestExponentSweep:
    """Test the exponent table."""

    def test_should_emit_one_row_per_exponent(self, sweep: pd.DataFrame) -> None:
        """Test a 3-row table with the fixed columns."""
        assert list(sweep.columns) == SWEEP_COLUMNS
        assert list(sweep["r"]) == [1, 2, 3]
        assert (sweep["abs_L"] >= 0).all()

    def test_should_report_vanishing_value_at_conductor_three(self, sweep: pd.DataFrame) -> None:
        """Test the odd quadratic character is the only primitive one modulo 3."""
        first = sweep.iloc[0]

        assert first["abs_L"] < 1e-8
        assert np.isnan(first["exponent"])

    def test_should_accept_every_nonvanishing_row(self, sweep: pd.DataFrame) -> None:
        """Test X-stability and the exponent for r = 2, 3."""
        rows = sweep[sweep["r"] > 1]

        assert (rows["afe_residual"] < 1e-6).all()
        assert np.allclose(rows["exponent"], np.log(rows["abs_L"]) / np.log(3.0 ** rows["r"]))

    def test_should_be_reproducible(self, delta: CuspForm, sweep: pd.DataFrame) -> None:
        """Test the same seed gives the same table."""
        pd.testing.assert_frame_equal(exponent_sweep(delta, 3, [3, 2, 1], 10), sweep)

    def test_should_reject_conductor_beyond_cache(self) -> None:
        """Test 500 coefficients for conductor 27."""
        with pytest.raises(SizeLimitError, match="conductor 3\\^3"):
            exponent_sweep(CuspForm(12, cache_bound=500), 3, [3], 2)

    @pytest.mark.slow
    def test_should_resolve_root_numbers_up_to_81(self, delta: CuspForm) -> None:
        """Test every primitive character modulo 3^4 gives a unimodular root number."""
        table = exponent_sweep(delta, 3, [4], 54)

        assert table["afe_residual"].iloc[0] < 1e-6


class TestSampling:
    """Test character sampling and the reference exponent."""

    def test_should_draw_distinct_primitive_characters(self) -> None:
        """Test 5 of the 12 primitive characters modulo 27."""
        characters = sample_characters(3, 3, 5, np.random.default_rng(0))
        indices = [chi.index for chi in characters]

        assert len(set(indices)) == 5
        assert indices == sorted(indices)
        assert all(chi.primitive for chi in characters)

    def test_should_return_all_when_samples_exceed_count(self) -> None:
        """Test modulo 9 has 4 primitive characters."""
        assert len(sample_characters(3, 2, 10, np.random.default_rng(0))) == 4

    @pytest.mark.parametrize(("r", "expected"), [(1, 0.5), (3, 1 / 3), (4, 3 / 8), (6, 1 / 3)])
    def test_should_compute_dyadic_sum_exponent(self, r: int, expected: float) -> None:
        """Test (r - floor(r / 3)) / (2r)."""
        assert proposition_exponent(r) == pytest.approx(expected)
