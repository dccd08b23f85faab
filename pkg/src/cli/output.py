"""
Report files: the CSV table and its JSON sidecar.
"""

import json
from pathlib import Path
from typing import Any

from loguru import logger

from src.cli.config import RunConfig
from src.cli.suites import SuiteResult
from src.core.constants import CSV_FLOAT_FORMAT


def sidecar_path(csv_path: Path) -> Path:
    """<output>.json next to the CSV."""
    return csv_path.with_name(csv_path.name + ".json")


def summary_line(result: SuiteResult) -> str:
    status = "PASS" if result.all_passed else "FAIL"
    return f"{status} {result.passed}/{result.total}"


def write_reports(result: SuiteResult, config: RunConfig, csv_path: Path) -> Path:
    """Write the CSV with 17 significant digits and the config echo beside it.

    Args:
        result: Suite outcome
        config: Configuration of the run
        csv_path: Target CSV path; parent directories are created

    Returns:
        Path of the JSON sidecar
    """
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    result.table.to_csv(csv_path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")

    sidecar: dict[str, Any] = {
        "command": config.command.value,
        "seed": config.seed,
        "config": config.echo(),
        "rows": len(result.table),
        "passed": result.passed,
        "total": result.total,
        "csv": str(csv_path),
    }
    path = sidecar_path(csv_path)
    path.write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    logger.info(f"Wrote {len(result.table)} rows to {csv_path}")
    return path
