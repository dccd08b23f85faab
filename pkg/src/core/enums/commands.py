"""
Command-line suite enumerations.
"""

from enum import StrEnum


class Command(StrEnum):
    """
    Verification suites exposed by the command line.

    Each command writes one CSV report with a fixed header.
    """

    # Identities
    VERIFY_DELTA = "verify-delta"
    VERIFY_POISSON = "verify-poisson"
    VERIFY_VORONOI = "verify-voronoi"
    VERIFY_CHARSUM_C = "verify-charsum-C"
    VERIFY_DECOMPOSITION = "verify-decomposition"
    VERIFY_CHARACTERS = "verify-characters"
    VERIFY_STATIONARY_PHASE = "verify-stationary-phase"

    # Bound sweeps
    SWEEP_CHARSUM_A = "sweep-charsum-A"
    SWEEP_CHARSUM_B = "sweep-charsum-B"
    SWEEP_WEIL = "sweep-weil"
    VERIFY_J_BOUND = "verify-j-bound"
    VERIFY_RANKIN_SELBERG = "verify-rankin-selberg"
    VERIFY_CONGRUENCE = "verify-congruence"

    # Central values and tables
    LVALUE = "lvalue"
    EXPONENT_SWEEP = "exponent-sweep"
    DUMP_COEFFS = "dump-coeffs"

    @classmethod
    def from_string(cls, value: str) -> "Command":
        """
        Convert string to Command enum.

        Args:
            value: Command name as typed on the command line

        Returns:
            Corresponding Command enum value

        Raises:
            ValueError: If the command is not supported
        """
        for command in cls:
            if command.value == value:
                return command

        raise ValueError(
            f"Unsupported command: {value}. Supported commands: {', '.join(c.value for c in cls)}"
        )

    @property
    def is_sweep(self) -> bool:
        """Check if the suite draws random parameter tuples from the seed."""
        return self in [
            Command.SWEEP_CHARSUM_A,
            Command.SWEEP_CHARSUM_B,
            Command.SWEEP_WEIL,
            Command.EXPONENT_SWEEP,
        ]
