"""
Run configuration for the command line.

One flat model covers every suite; flags and JSON keys share the field
names. Fields a suite does not read are ignored by it, unknown keys are
rejected.
"""

import json
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.core.constants import (
    CHARSUM_GRID_BOUND,
    DEFAULT_SEED,
    J_BOUND_CONSTANT,
    RANKIN_SELBERG_CALIBRATION_X,
    SUPPORTED_WEIGHTS,
)
from src.core.enums import Command, ContourWeight
from src.core.exceptions.verification import ConfigError, VerificationException
from src.core.utils.validation import validate_odd_prime
from src.numtheory.characters import primitive_by_index


def _odd_prime(value: int, name: str) -> int:
    try:
        return validate_odd_prime(value, name)
    except VerificationException as e:
        raise ValueError(str(e)) from e


class RunConfig(BaseModel):
    """Validated parameters of one command-line run."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command = Field(..., description="Suite to run")
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64, description="Seed of every sampler")
    output: Path | None = Field(default=None, description="CSV path; <output_dir>/<command>.csv")
    workers: int | None = Field(default=None, ge=1, description="Process pool size")
    tolerance: float | None = Field(default=None, gt=0, description="Override for identity checks")

    # Delta expansion
    nmax: int = Field(default=100, ge=0, description="Largest |n| of the delta sweep")
    Q: list[float] = Field(default=[3.0, 7.0, 15.0, 31.0], description="Circle-method parameters")
    quadrature_nodes: int = Field(default=0, ge=0, description="0 selects the closed form")

    # Poisson summation
    scales: list[float] = Field(default=[0.5, 1.0, 2.0], description="Gaussian dilations")
    shifts: list[float] = Field(default=[0.0, 0.3], description="Gaussian translations")

    # Voronoi summation and the kernel integral
    q_max: int | None = Field(default=None, ge=1, description="Largest modulus q; suite default")
    X: list[float] = Field(default=[100.0, 400.0], description="Window scales")
    weight: int = Field(default=12, description="Weight of the cusp form")
    n_values: list[int] = Field(default=[1, 10, 100, 1000], description="Dual indices n of J")
    j_constant: float = Field(default=J_BOUND_CONSTANT, gt=0, description="C in the J bound")

    # Character sums and characters
    primes: list[int] | None = Field(default=None, description="Primes; suite default when unset")
    exponents: list[int] | None = Field(default=None, description="Exponents r; suite default")
    bound: int = Field(default=CHARSUM_GRID_BOUND, ge=1, description="p^r q bound of the C grid")
    samples: int | None = Field(default=None, ge=1, description="Cases per prime; suite default")
    reduction: bool = Field(default=False, description="Also verify the A reduction")

    # Dyadic sums
    N: list[int] | None = Field(default=None, description="Dyadic scales; suite default")
    ell: int = Field(default=1, ge=0, description="Exponent of the congruence modulus")
    r: int = Field(default=2, ge=1, description="Exponent of the character modulus")
    index: int = Field(default=1, ge=0, description="Character index")

    # Stationary phase
    T: list[float] = Field(default=[1e3, 1e4], description="Phase scales")

    # Rankin-Selberg
    xs: list[float] = Field(default=[1e4, 1e5], description="Checkpoints of the mean square")
    calibration_x: int = Field(default=RANKIN_SELBERG_CALIBRATION_X, ge=1)

    # Central values
    p: int = Field(default=3, description="Prime of the conductor")
    rmax: int = Field(default=3, ge=1, description="Largest conductor exponent of the sweep")
    G: ContourWeight | None = Field(default=None, description="Contour weight; suite default")
    balance: float = Field(default=1.0, gt=0, description="AFE balance parameter X")
    compare_weights: bool = Field(default=False, description="Also compare two contour weights")

    # Coefficient dump
    count: int = Field(default=100, ge=1, description="Number of coefficients to dump")

    @field_validator("weight")
    @classmethod
    def validate_weight(cls, v: int) -> int:
        """Validate the weight has a one-dimensional cusp form space."""
        if v not in SUPPORTED_WEIGHTS:
            raise ValueError(f"weight must be one of {SUPPORTED_WEIGHTS}, got {v}")
        return v

    @field_validator("Q")
    @classmethod
    def validate_q(cls, v: list[float]) -> list[float]:
        """Validate every Q >= 1."""
        if not v or min(v) < 1:
            raise ValueError(f"Q values must be at least 1, got {v}")
        return v

    @field_validator("p")
    @classmethod
    def validate_prime(cls, v: int) -> int:
        """Validate p is an odd prime."""
        return _odd_prime(v, "p")

    @field_validator("primes")
    @classmethod
    def validate_primes(cls, v: list[int] | None) -> list[int] | None:
        """Validate every listed prime is odd."""
        if v is not None:
            for prime in v:
                _odd_prime(prime, "primes")
        return v

    @model_validator(mode="after")
    def validate_character_index(self) -> "RunConfig":
        """Validate index against the moduli the run builds characters for."""
        if self.command is Command.LVALUE:
            moduli = [self.p]
        elif self.command is Command.VERIFY_DECOMPOSITION and self.primes:
            moduli = list(self.primes)
        else:
            return self
        for p in moduli:
            phi = (p - 1) * p ** (self.r - 1)
            if self.index >= phi:
                raise ValueError(f"index must be below phi({p}^{self.r}) = {phi}, got {self.index}")
            if self.command is Command.LVALUE and not primitive_by_index(p, self.r, self.index):
                raise ValueError(f"index {self.index} gives an imprimitive character modulo {p}^{self.r}")
        return self

    @field_validator("G", mode="before")
    @classmethod
    def parse_weight_name(cls, v: Any) -> Any:
        """Accept contour weight names in any case."""
        if isinstance(v, str):
            return ContourWeight.from_string(v)
        return v

    @field_validator("command", mode="before")
    @classmethod
    def parse_command(cls, v: Any) -> Any:
        """Accept command names as typed on the command line."""
        if isinstance(v, str):
            return Command.from_string(v)
        return v

    def resolved_output(self, output_dir: Path) -> Path:
        """CSV path of the run."""
        return self.output or output_dir / f"{self.command.value}.csv"

    def echo(self) -> dict[str, Any]:
        """JSON-safe copy of every field."""
        return self.model_dump(mode="json")


def load_config_file(path: Path) -> dict[str, Any]:
    """Read a JSON object of config keys.

    Raises:
        ConfigError: If the file is missing or not a JSON object
    """
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a JSON object")
    return data


def build_config(file_values: dict[str, Any], flag_values: dict[str, Any]) -> RunConfig:
    """Merge file keys with flags (flags win) and validate.

    Args:
        file_values: Keys from the --config file
        flag_values: Keys given on the command line; None means not given

    Returns:
        Validated run configuration

    Raises:
        ConfigError: If the merged keys are empty, unknown or invalid
    """
    merged = {**file_values, **{k: v for k, v in flag_values.items() if v is not None}}
    if not merged:
        raise ConfigError("Empty configuration: a command is required")
    if "command" not in merged:
        raise ConfigError("Configuration names no command")
    try:
        return RunConfig.model_validate(merged)
    except (ValidationError, ValueError) as e:
        raise ConfigError(f"Invalid configuration: {e}") from e
