"""
Verification suites behind the command-line commands.

Each suite expands a RunConfig into independent tasks. A task is a partial
of a module-level function so a process pool can pickle it, and it returns
the reports of one case. Tasks run in a fixed order and their results are
re-sorted into that order, so the worker count never changes the output.
"""

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, replace
from functools import lru_cache, partial
from math import gcd, sqrt
from typing import Any

import pandas as pd
from loguru import logger
from tqdm import tqdm

from src.charsums.sweeps import (
    alpha_cases,
    alpha_relation_reports,
    beta_cases,
    check_alpha_case,
    check_beta_case,
    check_congruence_case,
    check_gauss_grid_case,
    check_weil_case,
    congruence_cases,
    gauss_grid_cases,
    legendre_bound_reports,
    weil_cases,
    weil_exact_reports,
)
from src.cli.config import RunConfig
from src.core.constants import (
    AFE_RESIDUAL_TOLERANCE,
    CENTRAL_VALUE_NOISE_FLOOR,
    IDENTITY_TOLERANCE,
)
from src.core.enums import CheckKind, Command, ContourWeight
from src.core.models.config import AfeConfig
from src.core.models.report import VerificationReport
from src.lvalue.afe import afe_truncation, central_value, weight_agreement
from src.lvalue.dyadic import decomposition_verify
from src.lvalue.sweep import SWEEP_COLUMNS, central_value_reports, exponent_sweep
from src.numtheory.characters import (
    DirichletCharacter,
    gauss_expansion,
    make_character,
    primitive_characters,
    twisted_gauss_sum,
)
from src.numtheory.forms import CuspForm, deligne_violations, rankin_selberg_check
from src.transforms.delta import delta_verify
from src.transforms.poisson import GaussianTestFunction, WindowTestFunction, poisson_verify
from src.transforms.stationary import stationary_phase_decay, stationary_phase_verify
from src.transforms.voronoi import (
    default_truncation,
    voronoi_J_bound_check,
    voronoi_verify,
    voronoi_window,
)

REPORT_COLUMNS = [
    "identity",
    "params",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_err",
    "rel_err",
    "passed",
    "time_ms",
]

Task = Callable[[], list[VerificationReport]]


@dataclass(frozen=True)
class SuiteResult:
    """Rows of one run and the outcome of its assertions."""

    table: pd.DataFrame
    passed: int
    total: int

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total

    @classmethod
    def from_reports(cls, reports: list[VerificationReport]) -> "SuiteResult":
        table = pd.DataFrame([report.to_row() for report in reports], columns=REPORT_COLUMNS)
        return cls(table, sum(report.passed for report in reports), len(reports))


@lru_cache(maxsize=4)
def cached_form(weight: int, cache_bound: int) -> CuspForm:
    """One coefficient cache per worker process."""
    return CuspForm(weight, cache_bound=cache_bound)


def _as_list(check: Callable[..., VerificationReport], *args: Any) -> list[VerificationReport]:
    return [check(*args)]


# Identities


def _delta_case(nmax: int, Q: float, quadrature_nodes: int) -> list[VerificationReport]:
    return [delta_verify(n, Q, quadrature_nodes) for n in range(-nmax, nmax + 1)]


def _poisson_gaussian_case(scale: float, shift: float) -> list[VerificationReport]:
    return [poisson_verify(GaussianTestFunction(scale=scale, shift=shift))]


def _poisson_window_case() -> list[VerificationReport]:
    return [poisson_verify(WindowTestFunction())]


def _voronoi_case(weight: int, cache_bound: int, q: int, X: float) -> list[VerificationReport]:
    form = cached_form(weight, cache_bound)
    window = voronoi_window(X)
    return [voronoi_verify(form, a, q, window) for a in range(1, q + 1) if gcd(a, q) == 1]


def _decomposition_case(
    weight: int, cache_bound: int, p: int, r: int, index: int, N: int, ell: int
) -> list[VerificationReport]:
    form = cached_form(weight, cache_bound)
    return [decomposition_verify(form, make_character(p, r, index), N, ell)]


def character_reports(chi: DirichletCharacter) -> list[VerificationReport]:
    """Gauss sum identities of one primitive character.

    |tau(chi)| = sqrt(P), the separability sum_beta chi(beta) e(beta m / P) =
    conj chi(m) tau(chi) at a unit m and at m = p, and the additive expansion
    of chi(2).
    """
    tau = chi.gauss_sum.value
    params = chi.to_dict()
    reports = [
        VerificationReport.compare(
            "gauss_sum_modulus", abs(tau), sqrt(chi.modulus), IDENTITY_TOLERANCE, params=params
        )
    ]
    for m in (2, chi.p):
        reports.append(
            VerificationReport.compare(
                "gauss_sum_separability",
                twisted_gauss_sum(chi, m),
                chi.conjugate()(m) * tau,
                IDENTITY_TOLERANCE * sqrt(chi.modulus),
                check=CheckKind.ABSOLUTE,
                params={**params, "m": m},
            )
        )
    reports.append(
        VerificationReport.compare(
            "gauss_expansion",
            gauss_expansion(chi, 2),
            chi(2),
            IDENTITY_TOLERANCE,
            check=CheckKind.ABSOLUTE,
            params={**params, "n": 2},
        )
    )
    return reports


def _character_case(p: int, r: int) -> list[VerificationReport]:
    return [report for chi in primitive_characters(p, r) for report in character_reports(chi)]


def _stationary_case(Ts: tuple[float, ...]) -> list[VerificationReport]:
    reports = [stationary_phase_verify(T) for T in Ts]
    decays = [stationary_phase_decay(low, high) for low, high in zip(reports, reports[1:])]
    return reports + decays


# Bounds


def _j_bound_case(
    n: int, N: int, q: int, ell: int, p: int, weight: int, constant: float
) -> list[VerificationReport]:
    return [voronoi_J_bound_check(n, N, q, ell, p, weight=weight, constant=constant)]


def _rankin_selberg_case(
    weight: int, xs: tuple[float, ...], calibration_x: int
) -> list[VerificationReport]:
    form = cached_form(weight, int(max(xs)))
    return rankin_selberg_check(form, xs, calibration_x)


def _lvalue_case(
    weight: int,
    cache_bound: int,
    chi: DirichletCharacter,
    config: AfeConfig,
    compare_with: ContourWeight | None,
) -> list[VerificationReport]:
    form = cached_form(weight, cache_bound)
    value = central_value(form, chi, config)
    logger.info(
        f"L(1/2) = {value.value.real:.12g} {value.value.imag:+.12g}i "
        f"for {chi.to_dict()}, root number {value.root_number:.8g}"
    )
    reports = central_value_reports(value)
    if compare_with is not None:
        reports.append(weight_agreement(form, chi, (config.G, compare_with), config.X))
    return reports


def _primes(config: RunConfig, default: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(config.primes) if config.primes else default


def _exponents(config: RunConfig, default: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(config.exponents) if config.exponents else default


def _samples(config: RunConfig, default: int) -> int:
    return config.samples or default


def _scales(config: RunConfig, default: list[int]) -> list[int]:
    return config.N or default


def delta_tasks(config: RunConfig) -> list[Task]:
    return [partial(_delta_case, config.nmax, Q, config.quadrature_nodes) for Q in config.Q]


def poisson_tasks(config: RunConfig) -> list[Task]:
    tasks: list[Task] = [
        partial(_poisson_gaussian_case, scale, shift)
        for scale in config.scales
        for shift in config.shifts
    ]
    return [*tasks, _poisson_window_case]


def voronoi_tasks(config: RunConfig) -> list[Task]:
    q_max = config.q_max or 12
    smallest = min(config.X)
    cache_bound = max(2 * default_truncation(q_max, smallest), 2 * int(max(config.X)) + 1)
    return [
        partial(_voronoi_case, config.weight, cache_bound, q, X)
        for q in range(1, q_max + 1)
        for X in config.X
    ]


def charsum_c_tasks(config: RunConfig) -> list[Task]:
    cases = gauss_grid_cases(_primes(config, (3, 5, 7)), config.bound, seed=config.seed)
    return [partial(_as_list, check_gauss_grid_case, case) for case in cases]


def charsum_a_tasks(config: RunConfig) -> list[Task]:
    cases = alpha_cases(
        _primes(config, (5, 7)),
        _exponents(config, (3, 6)),
        _samples(config, 100),
        seed=config.seed,
    )
    return [partial(check_alpha_case, case, config.reduction) for case in cases]


def charsum_b_tasks(config: RunConfig) -> list[Task]:
    cases = beta_cases(_primes(config, (11, 31, 101)), _samples(config, 50), config.seed)
    return [partial(_as_list, check_beta_case, case) for case in cases]


def weil_tasks(config: RunConfig) -> list[Task]:
    primes = _primes(config, (11, 31, 101))
    cases = weil_cases(primes, _samples(config, 50), config.seed)
    return [
        weil_exact_reports,
        partial(legendre_bound_reports, primes),
        *(partial(_as_list, check_weil_case, case) for case in cases),
    ]


def congruence_tasks(config: RunConfig) -> list[Task]:
    cases = congruence_cases(_samples(config, 50), config.seed)
    return [
        *(partial(_as_list, check_congruence_case, case) for case in cases),
        partial(alpha_relation_reports, _primes(config, (3, 5, 7))),
    ]


def decomposition_tasks(config: RunConfig) -> list[Task]:
    scales = _scales(config, [30, 50, 80])
    cache_bound = 2 * max(scales)
    return [
        partial(
            _decomposition_case,
            config.weight,
            cache_bound,
            p,
            config.r,
            config.index,
            N,
            config.ell,
        )
        for p in _primes(config, (3, 5))
        for N in scales
    ]


def character_tasks(config: RunConfig) -> list[Task]:
    return [
        partial(_character_case, p, r)
        for p in _primes(config, (3, 5, 7))
        for r in _exponents(config, (1, 2, 3))
    ]


def stationary_tasks(config: RunConfig) -> list[Task]:
    return [partial(_stationary_case, tuple(sorted(config.T)))]


def j_bound_tasks(config: RunConfig) -> list[Task]:
    return [
        partial(_j_bound_case, n, N, q, config.ell, p, config.weight, config.j_constant)
        for p in _primes(config, (3,))
        for N in _scales(config, [100])
        for q in range(1, (config.q_max or 2) + 1)
        for n in config.n_values
    ]


def rankin_selberg_tasks(config: RunConfig) -> list[Task]:
    return [partial(_rankin_selberg_case, config.weight, tuple(config.xs), config.calibration_x)]


def lvalue_tasks(config: RunConfig) -> list[Task]:
    chi = make_character(config.p, config.r, config.index)
    afe = AfeConfig(G=config.G or ContourWeight.EXP_SQUARE, X=config.balance)
    compare_with = None
    weights = [afe.G]
    if config.compare_weights:
        compare_with = ContourWeight.UNIT if afe.G is ContourWeight.SECANT else ContourWeight.SECANT
        weights.append(compare_with)
    cache_bound = max(
        afe_truncation(chi.modulus, config.weight, G, afe.X, afe.sigma) for G in weights
    )
    return [partial(_lvalue_case, config.weight, cache_bound, chi, afe, compare_with)]


TASK_BUILDERS: dict[Command, Callable[[RunConfig], list[Task]]] = {
    Command.VERIFY_DELTA: delta_tasks,
    Command.VERIFY_POISSON: poisson_tasks,
    Command.VERIFY_VORONOI: voronoi_tasks,
    Command.VERIFY_CHARSUM_C: charsum_c_tasks,
    Command.VERIFY_DECOMPOSITION: decomposition_tasks,
    Command.VERIFY_CHARACTERS: character_tasks,
    Command.VERIFY_STATIONARY_PHASE: stationary_tasks,
    Command.SWEEP_CHARSUM_A: charsum_a_tasks,
    Command.SWEEP_CHARSUM_B: charsum_b_tasks,
    Command.SWEEP_WEIL: weil_tasks,
    Command.VERIFY_J_BOUND: j_bound_tasks,
    Command.VERIFY_RANKIN_SELBERG: rankin_selberg_tasks,
    Command.VERIFY_CONGRUENCE: congruence_tasks,
    Command.LVALUE: lvalue_tasks,
}


def execute(tasks: list[Task], workers: int, desc: str) -> list[VerificationReport]:
    """Run tasks in order, in a process pool when workers > 1.

    Args:
        tasks: Picklable zero-argument callables
        workers: Process pool size
        desc: Progress bar label

    Returns:
        Reports of every task, in task order
    """
    if workers <= 1 or len(tasks) <= 1:
        batches = [task() for task in tqdm(tasks, desc=desc, unit="case")]
    else:
        results: dict[int, list[VerificationReport]] = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(task): i for i, task in enumerate(tasks)}
            for future in tqdm(as_completed(futures), total=len(futures), desc=desc, unit="case"):
                results[futures[future]] = future.result()
        batches = [results[i] for i in range(len(tasks))]
    return [report for batch in batches for report in batch]


def apply_tolerance(report: VerificationReport, tolerance: float | None) -> VerificationReport:
    """Re-judge an identity report against an override tolerance; bounds are unchanged."""
    if tolerance is None or report.check not in (CheckKind.RELATIVE, CheckKind.ABSOLUTE):
        return report
    measured = report.abs_err if report.check is CheckKind.ABSOLUTE else report.rel_err
    return replace(report, tolerance=tolerance, passed=bool(measured < tolerance))


def run_exponent_sweep(config: RunConfig) -> SuiteResult:
    """Exponent table; a row passes when its value vanishes or its AFE residual is small."""
    afe = AfeConfig(G=config.G or ContourWeight.UNIT, X=config.balance)
    largest = afe_truncation(config.p**config.rmax, config.weight, afe.G, afe.X, afe.sigma)
    form = cached_form(config.weight, largest)
    table = exponent_sweep(
        form,
        config.p,
        range(1, config.rmax + 1),
        _samples(config, 10),
        seed=config.seed,
        config=afe,
        progress=True,
    )
    tolerance = config.tolerance or AFE_RESIDUAL_TOLERANCE
    accepted = (table["abs_L"] <= CENTRAL_VALUE_NOISE_FLOOR) | (table["afe_residual"] < tolerance)
    return SuiteResult(table[SWEEP_COLUMNS], int(accepted.sum()), len(table))


def run_dump_coeffs(config: RunConfig) -> SuiteResult:
    """Exact a(n) and lambda(n) for n <= count, with the Deligne bound as the one assertion."""
    form = cached_form(config.weight, config.count)
    n = range(1, config.count + 1)
    table = pd.DataFrame(
        {
            "n": list(n),
            "a_n": [str(form.coefficient(k)) for k in n],
            "lambda_n": form.normalized_table(config.count)[1:],
        }
    )
    violations = deligne_violations(form, config.count)
    if violations.size:
        logger.warning(f"Deligne bound fails at n = {violations[:10].tolist()}")
    return SuiteResult(table, int(violations.size == 0), 1)


def run_suite(config: RunConfig, workers: int) -> SuiteResult:
    """Run the suite a config names.

    Raises:
        VerificationException: If a case cannot be evaluated
    """
    if config.command is Command.EXPONENT_SWEEP:
        return run_exponent_sweep(config)
    if config.command is Command.DUMP_COEFFS:
        return run_dump_coeffs(config)
    tasks = TASK_BUILDERS[config.command](config)
    logger.info(f"{config.command.value}: {len(tasks)} tasks on {workers} worker(s)")
    reports = execute(tasks, workers, config.command.value)
    return SuiteResult.from_reports([apply_tolerance(r, config.tolerance) for r in reports])
