"""
Circle-method expansion of the Kronecker delta.

    delta(n) = 2 Re integral_0^1 sum_{q <= Q} sum*_{Q < a <= q + Q} (1/aq) e(n a_bar/q - n x/(aq)) dx

The x-integral has the closed form (e(-beta) - 1) / (-2 pi i beta) with
beta = n / (aq), and 1 at n = 0.
"""

import time
from functools import lru_cache
from math import floor, gcd

import numpy as np
import numpy.typing as npt

from src.core.constants import DELTA_TOLERANCE
from src.core.enums import CheckKind
from src.core.models.config import DeltaConfig
from src.core.models.report import VerificationReport
from src.core.utils.decorators import log_verification
from src.numtheory.modarith import inverse_or_zero
from src.transforms.quadrature import gauss_legendre_grid

FareyPairs = tuple[npt.NDArray[np.int64], npt.NDArray[np.int64], npt.NDArray[np.int64]]


@lru_cache(maxsize=32)
def farey_pairs(Q: float) -> FareyPairs:
    """All (q, a, a_bar) with 1 <= q <= Q, Q < a <= q + Q and gcd(a, q) = 1.

    a_bar is the inverse of a modulo q (0 for q = 1).
    """
    qs, as_, inverses = [], [], []
    for q in range(1, floor(Q) + 1):
        for a in range(floor(Q) + 1, floor(q + Q) + 1):
            if gcd(a, q) == 1:
                qs.append(q)
                as_.append(a)
                inverses.append(inverse_or_zero(a, q))
    arrays = tuple(np.array(values, dtype=np.int64) for values in (qs, as_, inverses))
    for array in arrays:
        array.setflags(write=False)
    return arrays  # type: ignore[return-value]


def x_integral(beta: npt.NDArray[np.float64], quadrature_nodes: int = 0) -> npt.NDArray[np.complex128]:
    """Integral over [0, 1] of e(-beta x), closed form or Gauss-Legendre."""
    if quadrature_nodes > 0:
        x, w = gauss_legendre_grid(0.0, 1.0, 1, quadrature_nodes)
        return np.exp(-2j * np.pi * np.outer(beta, x)) @ w
    out = np.ones(beta.shape, dtype=np.complex128)
    nonzero = beta != 0
    b = beta[nonzero]
    out[nonzero] = (np.exp(-2j * np.pi * b) - 1.0) / (-2j * np.pi * b)
    return out


def delta_expand(cfg: DeltaConfig) -> float:
    """Evaluate the circle-method expansion at cfg.n.

    Returns:
        A real number equal to [n = 0] up to rounding
    """
    q, a, a_bar = farey_pairs(float(cfg.Q))
    n = cfg.n
    additive = np.exp(2j * np.pi * ((n * a_bar) % q) / q)
    beta = n / (a * q).astype(np.float64)
    total = np.sum(additive * x_integral(beta, cfg.quadrature_nodes) / (a * q))
    return float(2.0 * total.real)


@log_verification
def delta_verify(n: int, Q: float, quadrature_nodes: int = 0) -> VerificationReport:
    """Report |delta_expand(n, Q) - [n = 0]| against DELTA_TOLERANCE."""
    start = time.perf_counter()
    config = DeltaConfig(n=n, Q=Q, quadrature_nodes=quadrature_nodes)
    value = delta_expand(config)
    return VerificationReport.compare(
        "delta",
        value,
        1.0 if n == 0 else 0.0,
        DELTA_TOLERANCE,
        check=CheckKind.ABSOLUTE,
        params=config.to_dict(),
        truncation={"pairs": len(farey_pairs(float(Q))[0])},
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )
