"""
Conductor-exponent sweeps of central values.

For each exponent r the sweep samples primitive characters modulo p^r,
evaluates L(f x chi, 1/2) and records the largest value together with the
empirical exponent log max|L| / log p^r. The table is descriptive: the only
check is a logged comparison with the convexity reference C P^0.51.
"""

from collections.abc import Iterable
from math import isnan, log

import numpy as np
import pandas as pd
from loguru import logger
from tqdm import tqdm

from src.core.constants import CENTRAL_VALUE_NOISE_FLOOR, CONVEXITY_EXPONENT, DEFAULT_SEED
from src.core.enums import ContourWeight
from src.core.exceptions.verification import PreconditionViolatedError, SizeLimitError
from src.core.models.central_value import CentralValue
from src.core.models.config import AfeConfig
from src.core.models.report import VerificationReport
from src.core.protocols import CoefficientSource
from src.core.utils.decorators import validate_inputs
from src.core.utils.validation import validate_odd_prime
from src.lvalue.afe import afe_truncation, central_value, reality_report, residual_report
from src.numtheory.characters import DirichletCharacter, primitive_characters

SWEEP_COLUMNS = ["p", "r", "chi_index", "re_L", "im_L", "abs_L", "exponent", "afe_residual"]


def proposition_exponent(r: int) -> float:
    """(r - floor(r / 3)) / (2r), the exponent the dyadic-sum bound gives at conductor p^r."""
    return (r - r // 3) / (2 * r)


def sample_characters(
    p: int, r: int, samples: int, rng: np.random.Generator
) -> list[DirichletCharacter]:
    """Up to `samples` distinct primitive characters modulo p^r in index order."""
    characters = list(primitive_characters(p, r))
    if len(characters) <= samples:
        return characters
    chosen = np.sort(rng.choice(len(characters), size=samples, replace=False))
    return [characters[i] for i in chosen]


def central_value_reports(value: CentralValue) -> list[VerificationReport]:
    """X-stability and reality reports for one central value."""
    return [residual_report(value), reality_report(value)]


@validate_inputs
def exponent_sweep(
    form: CoefficientSource,
    p: int,
    r_list: Iterable[int],
    samples_per_r: int,
    seed: int = DEFAULT_SEED,
    config: AfeConfig | None = None,
    progress: bool = False,
) -> pd.DataFrame:
    """Largest sampled |L(f x chi, 1/2)| per conductor p^r.

    Args:
        form: Level-one eigenform whose cache covers the largest conductor
        p: Odd prime
        r_list: Exponents of the conductor
        samples_per_r: Characters drawn per exponent
        seed: Seed of the character sampler
        config: AFE parameters, the unit contour weight by default
        progress: Show a progress bar over characters

    Returns:
        One row per r with columns SWEEP_COLUMNS, sorted by r

    Raises:
        SizeLimitError: If the largest conductor needs more coefficients than cached
    """
    validate_odd_prime(p)
    config = config or AfeConfig(G=ContourWeight.UNIT)
    exponents = sorted(set(r_list))
    if not exponents or exponents[0] < 1:
        raise PreconditionViolatedError(
            "exponent_sweep", f"exponents must be positive, got {exponents}"
        )

    largest = afe_truncation(p ** exponents[-1], form.weight, config.G, config.X, config.sigma)
    if largest > form.cache_bound:
        raise SizeLimitError(
            largest, form.cache_bound, f"coefficients for conductor {p}^{exponents[-1]}"
        )
    form.normalized_table(largest)

    rng = np.random.default_rng(seed)
    rows = []
    for r in exponents:
        characters = sample_characters(p, r, samples_per_r, rng)
        values = [
            central_value(form, chi, config)
            for chi in tqdm(characters, desc=f"p^r = {p}^{r}", disable=not progress)
        ]
        best = max(range(len(values)), key=lambda i: values[i].abs_value)
        top = values[best]
        vanishing = top.abs_value <= CENTRAL_VALUE_NOISE_FLOOR
        exponent = float("nan") if vanishing else log(top.abs_value) / log(p**r)
        rows.append(
            {
                "p": p,
                "r": r,
                "chi_index": characters[best].index,
                "re_L": top.value.real,
                "im_L": top.value.imag,
                "abs_L": top.abs_value,
                "exponent": exponent,
                "afe_residual": max(v.afe_residual for v in values),
            }
        )
        logger.info(
            f"p^r = {p}^{r}: max |L| = {top.abs_value:.6g}, exponent {exponent:.4f}, "
            f"dyadic-sum exponent {proposition_exponent(r):.4f}"
        )

    table = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    _check_convexity(table)
    return table


def _check_convexity(table: pd.DataFrame) -> None:
    """Log values above C P^0.51, with C fixed at the first non-vanishing row."""
    calibrated = table[table["abs_L"] > CENTRAL_VALUE_NOISE_FLOOR]
    if calibrated.empty:
        logger.warning("Every sampled central value vanishes; convexity constant not calibrated")
        return
    first = calibrated.iloc[0]
    constant = first["abs_L"] / float(first["p"] ** first["r"]) ** CONVEXITY_EXPONENT
    logger.info(f"Convexity constant C = {constant:.6g} calibrated at r = {first['r']}")
    for row in table.itertuples():
        reference = constant * float(row.p**row.r) ** CONVEXITY_EXPONENT
        if row.abs_L > reference * (1 + 1e-12) and not isnan(row.exponent):
            logger.warning(
                f"|L| = {row.abs_L:.6g} at {row.p}^{row.r} exceeds C P^0.51 = {reference:.6g}"
            )
