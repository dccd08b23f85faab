"""
Unit tests for the run configuration, settings and suite helpers.
"""

from pathlib import Path

import pytest

from src.cli.config import RunConfig, build_config
from src.cli.output import sidecar_path, summary_line
from src.cli.settings import VerificationSettings
from src.cli.suites import (
    REPORT_COLUMNS,
    SuiteResult,
    apply_tolerance,
    character_reports,
    delta_tasks,
    lvalue_tasks,
    voronoi_tasks,
)
from src.core.enums import CheckKind, Command, ContourWeight
from src.core.exceptions.verification import ConfigError
from src.core.models.report import VerificationReport
from src.numtheory.characters import primitive_characters


class TestRunConfig:
    """Test RunConfig validation."""

    def test_should_default_seed(self) -> None:
        """Test seed defaults to 0x5EED."""
        config = RunConfig(command=Command.VERIFY_DELTA)
        assert config.seed == 0x5EED

    def test_should_parse_command_name(self) -> None:
        """Test commands are accepted as typed on the command line."""
        config = build_config({}, {"command": "exponent-sweep", "G": "SECANT"})

        assert config.command is Command.EXPONENT_SWEEP
        assert config.G is ContourWeight.SECANT

    def test_should_reject_unknown_key(self) -> None:
        """Test extra='forbid'."""
        with pytest.raises(ConfigError, match="Invalid configuration"):
            build_config({"command": "verify-delta", "nmx": 10}, {})

    def test_should_reject_empty_config(self) -> None:
        """Test no keys at all."""
        with pytest.raises(ConfigError, match="Empty configuration"):
            build_config({}, {})

    def test_should_reject_missing_command(self) -> None:
        """Test keys without a command."""
        with pytest.raises(ConfigError, match="no command"):
            build_config({"nmax": 3}, {})

    def test_should_reject_unknown_command(self) -> None:
        """Test a misspelled command."""
        with pytest.raises(ConfigError, match="Unsupported command"):
            build_config({"command": "verify-delat"}, {})

    @pytest.mark.parametrize(
        "values",
        [
            {"seed": -1},
            {"seed": 2**64},
            {"workers": 0},
            {"weight": 14},
            {"Q": []},
            {"tolerance": 0.0},
            {"p": 2},
            {"p": 4},
            {"primes": [3, 9]},
        ],
    )
    def test_should_reject_out_of_range_values(self, values: dict[str, object]) -> None:
        """Test field constraints."""
        with pytest.raises(ConfigError):
            build_config({"command": "verify-delta", **values}, {})

    def test_should_reject_imprimitive_central_character(self) -> None:
        """Test index 3 modulo 9 is divisible by 3."""
        with pytest.raises(ConfigError, match="imprimitive character modulo 3\\^2"):
            build_config({"command": "lvalue", "p": 3, "r": 2, "index": 3}, {})

    def test_should_reject_index_beyond_group_order(self) -> None:
        """Test index 6 modulo 9, for the central value and for listed decomposition primes."""
        with pytest.raises(ConfigError, match="below phi"):
            build_config({"command": "lvalue", "p": 3, "r": 2, "index": 6}, {})

        with pytest.raises(ConfigError, match="below phi"):
            build_config({"command": "verify-decomposition", "primes": [3], "r": 2, "index": 6}, {})

    def test_should_ignore_index_for_other_suites(self) -> None:
        """Test suites that build no character from index accept any index."""
        config = build_config({"command": "verify-delta", "index": 300}, {})
        assert config.index == 300

    def test_should_let_flags_win(self) -> None:
        """Test flags override file keys and None flags are ignored."""
        config = build_config(
            {"command": "verify-delta", "nmax": 50, "seed": 1}, {"nmax": 3, "seed": None}
        )

        assert (config.nmax, config.seed) == (3, 1)

    def test_should_place_output_in_directory(self, tmp_path: Path) -> None:
        """Test <output_dir>/<command>.csv when no path is given."""
        config = RunConfig(command=Command.SWEEP_WEIL)
        assert config.resolved_output(tmp_path) == tmp_path / "sweep-weil.csv"

    def test_should_echo_json_values(self) -> None:
        """Test the echo is JSON-safe."""
        echo = RunConfig(command=Command.LVALUE, G=ContourWeight.UNIT).echo()

        assert echo["command"] == "lvalue"
        assert echo["G"] == "unit"


class TestVerificationSettings:
    """Test LFV_ environment overrides."""

    def test_should_read_prefixed_environment(
        self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path
    ) -> None:
        """Test LFV_WORKERS and LFV_OUTPUT_DIR."""
        monkeypatch.setenv("LFV_WORKERS", "3")
        monkeypatch.setenv("LFV_OUTPUT_DIR", str(tmp_path))

        settings = VerificationSettings()

        assert settings.workers == 3
        assert settings.output_dir == tmp_path
        assert settings.log_level == "INFO"


class TestSuiteHelpers:
    """Test task expansion and report handling."""

    def test_should_expand_delta_tasks_per_q(self) -> None:
        """Test one task per Q covering every |n| <= nmax."""
        tasks = delta_tasks(RunConfig(command=Command.VERIFY_DELTA, nmax=4, Q=[3.0, 7.0]))

        reports = tasks[1]()

        assert len(tasks) == 2
        assert [r.params["n"] for r in reports] == list(range(-4, 5))

    def test_should_expand_voronoi_tasks(self) -> None:
        """Test one task per (q, X)."""
        config = RunConfig(command=Command.VERIFY_VORONOI, q_max=3, X=[100.0])
        assert len(voronoi_tasks(config)) == 3

    def test_should_size_lvalue_cache_for_both_weights(self) -> None:
        """Test the comparison weight is covered by the cache."""
        config = RunConfig(
            command=Command.LVALUE, p=3, r=2, G=ContourWeight.UNIT, compare_weights=True
        )

        (task,) = lvalue_tasks(config)

        assert task.args[4] is ContourWeight.SECANT

    def test_should_override_identity_tolerance(self) -> None:
        """Test a relative report is re-judged and a bound report is not."""
        identity = VerificationReport.compare("x", 1.0, 1.0 + 1e-7, 1e-6)
        bound = VerificationReport.bound("y", 2.0, 1.0)

        assert not apply_tolerance(identity, 1e-9).passed
        assert apply_tolerance(identity, 1e-9).tolerance == 1e-9
        assert apply_tolerance(bound, 10.0) is bound
        assert apply_tolerance(identity, None) is identity

    def test_should_count_passes(self) -> None:
        """Test PASS m/n only when every report passes."""
        reports = [
            VerificationReport.compare("x", 1.0, 1.0, 1e-6),
            VerificationReport.bound("y", 2.0, 1.0),
        ]

        result = SuiteResult.from_reports(reports)

        assert list(result.table.columns) == REPORT_COLUMNS
        assert summary_line(result) == "FAIL 1/2"
        assert summary_line(SuiteResult.from_reports(reports[:1])) == "PASS 1/1"

    def test_should_name_sidecar_after_csv(self, tmp_path: Path) -> None:
        """Test <output>.json."""
        assert sidecar_path(tmp_path / "a.csv") == tmp_path / "a.csv.json"


class TestCharacterReports:
    """Test the Gauss sum identities behind verify-characters."""

    @pytest.mark.parametrize(("p", "r"), [(3, 1), (5, 2), (3, 3)])
    def test_should_pass_for_primitive_characters(self, p: int, r: int) -> None:
        """Test modulus, separability and additive expansion."""
        for chi in primitive_characters(p, r):
            reports = character_reports(chi)

            assert len(reports) == 4
            assert all(report.passed for report in reports)

    def test_should_compare_separability_absolutely(self) -> None:
        """Test m = p gives zero on both sides."""
        chi = next(primitive_characters(7, 1))

        reports = character_reports(chi)

        assert reports[2].check is CheckKind.ABSOLUTE
        assert abs(reports[2].lhs) < 1e-9
