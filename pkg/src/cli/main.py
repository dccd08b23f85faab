"""
Command-line entry point.

Runs one verification suite and writes its CSV report with a JSON sidecar.
Exit status is 0 when every assertion passes, 1 when one fails or a case
cannot be evaluated, and 2 for an invalid configuration.
"""

import argparse
import sys
from pathlib import Path
from typing import Any

from loguru import logger

from src.cli.config import build_config, load_config_file
from src.cli.output import summary_line, write_reports
from src.cli.settings import VerificationSettings
from src.cli.suites import run_suite
from src.core.constants import EXIT_CONFIG_ERROR, EXIT_FAIL, EXIT_PASS
from src.core.enums import Command, ContourWeight
from src.core.exceptions.verification import ConfigError, VerificationException


def setup_logging(level: str = "INFO") -> None:
    """Configure logging with loguru."""
    logger.remove()

    logger.add(
        sys.stderr,
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        level=level,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lfunction-verify",
        description="Verify the identities and bounds behind subconvexity for twisted L-functions",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Delta expansion for |n| <= 100 at Q = 7
  python -m src.cli verify-delta --nmax 100 --Q 7

  # Voronoi summation for q <= 6 on four workers
  python -m src.cli verify-voronoi --q-max 6 --workers 4

  # Exponent table for conductors 3, 9, 27
  python -m src.cli exponent-sweep --p 3 --rmax 3 --output reports/exponents.csv

  # Parameters from a JSON file, flags win
  python -m src.cli --config run.json --seed 7
        """,
    )

    parser.add_argument(
        "command",
        nargs="?",
        choices=[c.value for c in Command],
        help="Suite to run (may come from --config instead)",
    )
    parser.add_argument("--config", type=Path, help="JSON file of config keys")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")

    run = parser.add_argument_group("run")
    run.add_argument(
        "--seed", type=lambda v: int(v, 0), help="Seed, decimal or 0x hex (default: 0x5EED)"
    )
    run.add_argument(
        "--output", type=Path, help="CSV path (default: <LFV_OUTPUT_DIR>/<command>.csv)"
    )
    run.add_argument("--workers", type=int, help="Process pool size (default: LFV_WORKERS or 1)")
    run.add_argument("--tolerance", type=float, help="Override the tolerance of identity checks")

    identities = parser.add_argument_group("identities")
    identities.add_argument("--nmax", type=int, help="Largest |n| of the delta sweep")
    identities.add_argument("--Q", type=float, nargs="+", help="Circle-method parameters")
    identities.add_argument(
        "--quadrature-nodes", type=int, help="Nodes of the x-integral; 0 is closed form"
    )
    identities.add_argument("--scales", type=float, nargs="+", help="Gaussian dilations")
    identities.add_argument("--shifts", type=float, nargs="+", help="Gaussian translations")
    identities.add_argument("--q-max", type=int, help="Largest modulus q")
    identities.add_argument("--X", type=float, nargs="+", help="Voronoi window scales")
    identities.add_argument("--weight", type=int, help="Weight of the cusp form (default: 12)")
    identities.add_argument("--N", type=int, nargs="+", help="Dyadic scales")
    identities.add_argument("--ell", type=int, help="Exponent of the congruence modulus")
    identities.add_argument("--r", type=int, help="Exponent of the character modulus")
    identities.add_argument("--index", type=int, help="Character index")
    identities.add_argument("--T", type=float, nargs="+", help="Stationary phase scales")

    sweeps = parser.add_argument_group("sweeps and bounds")
    sweeps.add_argument("--primes", type=int, nargs="+", help="Primes of the sweep")
    sweeps.add_argument("--exponents", type=int, nargs="+", help="Exponents r of the sweep")
    sweeps.add_argument("--bound", type=int, help="p^r q bound of the exhaustive grid")
    sweeps.add_argument("--samples", type=int, help="Seeded cases per prime or exponent")
    sweeps.add_argument(
        "--reduction", action="store_true", default=None, help="Also verify the A reduction"
    )
    sweeps.add_argument("--n-values", type=int, nargs="+", help="Dual indices n of the J bound")
    sweeps.add_argument("--j-constant", type=float, help="Constant C of the J bound")
    sweeps.add_argument("--xs", type=float, nargs="+", help="Rankin-Selberg checkpoints")
    sweeps.add_argument("--calibration-x", type=int, help="Rankin-Selberg calibration point")

    central = parser.add_argument_group("central values")
    central.add_argument("--p", type=int, help="Prime of the conductor")
    central.add_argument("--rmax", type=int, help="Largest exponent of the sweep")
    central.add_argument("--G", choices=[w.value for w in ContourWeight], help="Contour weight")
    central.add_argument("--balance", type=float, help="AFE balance parameter X")
    central.add_argument(
        "--compare-weights",
        action="store_true",
        default=None,
        help="Also compare two contour weights",
    )
    central.add_argument("--count", type=int, help="Coefficients written by dump-coeffs")

    return parser


def flag_values(args: argparse.Namespace) -> dict[str, Any]:
    """Config keys given as flags."""
    values = {k: v for k, v in vars(args).items() if k not in ("config", "debug")}
    return {k: v for k, v in values.items() if v is not None}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = VerificationSettings()
    setup_logging("DEBUG" if args.debug else settings.log_level)

    try:
        file_values = load_config_file(args.config) if args.config else {}
        config = build_config(file_values, flag_values(args))
    except ConfigError as e:
        logger.error(str(e))
        return EXIT_CONFIG_ERROR

    workers = config.workers or settings.workers
    csv_path = config.resolved_output(settings.output_dir)
    logger.info(f"Running {config.command.value} with seed {config.seed:#x}")

    try:
        result = run_suite(config, workers)
    except VerificationException as e:
        logger.error(f"{config.command.value} aborted: {type(e).__name__}: {e}")
        return EXIT_FAIL

    write_reports(result, config, csv_path)
    print(summary_line(result))

    if not result.all_passed:
        logger.warning(f"{result.total - result.passed} of {result.total} checks failed")
        return EXIT_FAIL
    logger.success(f"All {result.total} checks passed")
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
