"""
Integration tests for the command line: exit status, report files and determinism.
"""

import json
from pathlib import Path

import pandas as pd
import pytest

from src.cli.main import main
from src.cli.output import sidecar_path
from src.core.constants import EXIT_CONFIG_ERROR, EXIT_FAIL, EXIT_PASS
from src.lvalue.sweep import SWEEP_COLUMNS


class TestVerifyDelta:
    """Test the delta suite end to end."""

    def test_should_write_one_row_per_n(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test |n| <= 100 at Q = 7 gives 201 passing rows."""
        # Arrange
        output = tmp_path / "delta.csv"

        # Act
        status = main(["verify-delta", "--nmax", "100", "--Q", "7", "--output", str(output)])

        # Assert
        assert status == EXIT_PASS
        table = pd.read_csv(output)
        assert len(table) == 201
        assert table["passed"].all()
        assert "PASS 201/201" in capsys.readouterr().out

    def test_should_echo_config_in_sidecar(self, tmp_path: Path) -> None:
        """Test the JSON sidecar holds the seed, the config and the counts."""
        output = tmp_path / "delta.csv"

        main(["verify-delta", "--nmax", "2", "--Q", "3", "--seed", "0x10", "--output", str(output)])

        sidecar = json.loads(sidecar_path(output).read_text())
        assert sidecar["seed"] == 16
        assert sidecar["config"]["Q"] == [3.0]
        assert (sidecar["passed"], sidecar["total"], sidecar["rows"]) == (5, 5, 5)

    def test_should_let_flags_override_config_file(self, tmp_path: Path) -> None:
        """Test --nmax beats the file value."""
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"command": "verify-delta", "nmax": 5, "Q": [3]}))
        output = tmp_path / "delta.csv"

        status = main(["--config", str(config), "--nmax", "1", "--output", str(output)])

        assert status == EXIT_PASS
        assert len(pd.read_csv(output)) == 3

    def test_should_not_depend_on_worker_count(self, tmp_path: Path) -> None:
        """Test two workers write the same rows in the same order as one."""
        serial, parallel = tmp_path / "serial.csv", tmp_path / "parallel.csv"
        args = ["verify-delta", "--nmax", "10", "--Q", "3", "7", "15"]

        main([*args, "--output", str(serial)])
        main([*args, "--workers", "2", "--output", str(parallel)])

        columns = ["identity", "params", "lhs_re", "rhs_re", "abs_err", "passed"]
        pd.testing.assert_frame_equal(
            pd.read_csv(serial)[columns], pd.read_csv(parallel)[columns]
        )


class TestConfigErrors:
    """Test invalid configurations exit with status 2."""

    def test_should_reject_empty_config(self) -> None:
        """Test no command and no file."""
        assert main([]) == EXIT_CONFIG_ERROR

    def test_should_reject_unknown_key(self, tmp_path: Path) -> None:
        """Test extra keys in the JSON file."""
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"command": "verify-delta", "colour": "blue"}))

        assert main(["--config", str(config)]) == EXIT_CONFIG_ERROR

    def test_should_reject_missing_file(self, tmp_path: Path) -> None:
        """Test a config path that does not exist."""
        assert main(["--config", str(tmp_path / "absent.json")]) == EXIT_CONFIG_ERROR

    def test_should_reject_invalid_value(self, tmp_path: Path) -> None:
        """Test Q below 1."""
        args = ["verify-delta", "--Q", "0.5", "--output", str(tmp_path / "x.csv")]
        assert main(args) == EXIT_CONFIG_ERROR

    def test_should_reject_composite_prime(self, tmp_path: Path) -> None:
        """Test p = 4 fails validation before any suite runs."""
        output = tmp_path / "l.csv"

        assert main(["lvalue", "--p", "4", "--output", str(output)]) == EXIT_CONFIG_ERROR
        assert not output.exists()


class TestSuiteFailures:
    """Test failing assertions and aborted suites exit with status 1."""

    def test_should_fail_on_violated_bound(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test a J-bound constant of 10^-12."""
        output = tmp_path / "j.csv"
        args = ["verify-j-bound", "--n-values", "1", "--q-max", "1", "--j-constant", "1e-12"]

        status = main([*args, "--output", str(output)])

        assert status == EXIT_FAIL
        assert "FAIL 0/1" in capsys.readouterr().out
        assert not pd.read_csv(output)["passed"].any()

    def test_should_abort_on_size_limit(self, tmp_path: Path) -> None:
        """Test a weight-16 cache of 10^4 coefficients."""
        output = tmp_path / "rs.csv"
        args = ["verify-rankin-selberg", "--weight", "16", "--xs", "10000"]

        assert main([*args, "--output", str(output)]) == EXIT_FAIL
        assert not output.exists()


class TestTables:
    """Test the table-producing commands."""

    def test_should_write_identical_exponent_tables(self, tmp_path: Path) -> None:
        """Test a rerun with the same seed gives a byte-identical CSV."""
        first, second = tmp_path / "first.csv", tmp_path / "second.csv"
        args = ["exponent-sweep", "--p", "3", "--rmax", "3", "--samples", "4"]

        assert main([*args, "--output", str(first)]) == EXIT_PASS
        assert main([*args, "--output", str(second)]) == EXIT_PASS

        assert first.read_bytes() == second.read_bytes()
        assert list(pd.read_csv(first).columns) == SWEEP_COLUMNS

    def test_should_dump_exact_coefficients(self, tmp_path: Path) -> None:
        """Test tau(1..5) = 1, -24, 252, -1472, 4830."""
        output = tmp_path / "tau.csv"

        assert main(["dump-coeffs", "--count", "5", "--output", str(output)]) == EXIT_PASS

        table = pd.read_csv(output)
        assert table["a_n"].tolist() == [1, -24, 252, -1472, 4830]
        assert table["lambda_n"].iloc[0] == 1.0
