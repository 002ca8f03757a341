"""The double analogue of Euler's constant, by three independent routes.

The three definitions agree analytically; computing all of them and
reporting the spread is the point, since each exercises a different part
of the library: the limit route stresses raw series acceleration, the
pole route stresses evaluation close to s = 1, and the closed form
stresses the harmonic-weighted series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._tails import hurwitz_tail, shifted_tail
from .continuation import zeta2_eval
from .core import zeta2_direct
from .errors import ConvergenceError, DomainError
from .special import EULER_GAMMA, riemann_zeta
from .types import EvalSettings

# H_x - log x - gamma = 1/(2x) - sum B_{2k}/(2k) x^(-2k); coefficient pairs
# (c, power), remainder below x^(-10)
_HARMONIC_GAP = (
    (0.5, 1),
    (-1.0 / 12.0, 2),
    (1.0 / 120.0, 4),
    (-1.0 / 252.0, 6),
    (1.0 / 240.0, 8),
)
_HARMONIC_GAP_REM = 1.0 / 132.0  # |B_10 / 10|


@dataclass(frozen=True)
class Gamma2Result:
    via_limit: complex
    via_pole: complex
    via_closed: complex
    spread: float


def _settings(settings: EvalSettings | None) -> EvalSettings:
    return settings if settings is not None else EvalSettings()


def _neville_to_zero(hs: list[float], vals: list[complex]) -> tuple[complex, complex]:
    """Polynomial extrapolation to h = 0; returns (limit, previous level)."""
    tab = list(vals)
    prev_top = tab[0]
    for level in range(1, len(hs)):
        new = []
        for i in range(len(hs) - level):
            h_i, h_j = hs[i], hs[i + level]
            new.append((h_i * tab[i + 1] - h_j * tab[i]) / (h_i - h_j))
        prev_top = tab[0]
        tab = new
    return tab[0], prev_top


def _mean_gap_sum(s0: complex, N: int) -> complex:
    """sum_m m^(-s0) (H_{m+N} - H_m - log(m+N)), the pre-limit quantity.

    Head summed outright to M ~ 2N so the m-tail's binomial expansions
    sit at ratio ~ 1/3; the tail pushes the harmonic-gap expansion of
    both H terms through power-sum tails.
    """
    M = 2 * N + 64
    grid = np.arange(1, M + N + 1, dtype=np.float64)
    H = np.cumsum(1.0 / grid)
    m = np.arange(1, M + 1, dtype=np.float64)
    pm = np.exp(-s0 * np.log(m))
    d = H[N : N + M] - H[0:M] - np.log(m + N)
    total = complex(np.dot(pm, d))

    logs, _ = hurwitz_tail(s0, M + 1, p=1)
    total -= logs
    for c, pw in _HARMONIC_GAP:
        near, _ = hurwitz_tail(s0 + pw, M + 1)
        far, _ = shifted_tail(s0, float(pw), float(N), M)
        total += c * (far - near)
    return total


def _accelerated_limit(s0: complex, Ns: list[int], vals: list[complex]) -> complex:
    """Fit vals = gamma2 + sum_e beta_e N^(-e) over the known exponent
    ladder and read off the constant.

    The pre-limit sums expand in integer powers of 1/N plus an anomalous
    N^(1-s0) family from the m ~ N crossover; plain polynomial
    extrapolation stalls on the latter whenever s0 is not an integer.
    Near-integer s0 folds the anomalous exponents into the ladder.
    """
    exps: list[complex] = [1.0, 2.0, 3.0, 4.0]
    if min(abs(s0 - k) for k in range(1, 7)) > 0.05:
        exps += [s0, s0 + 1.0]
    else:
        exps += [5.0, 6.0]
    A = np.empty((len(Ns), len(exps) + 1), dtype=np.complex128)
    A[:, 0] = 1.0
    for j, e in enumerate(exps):
        A[:, j + 1] = [float(N) ** (-e) for N in Ns]
    coeffs, *_ = np.linalg.lstsq(A, np.asarray(vals, dtype=np.complex128), rcond=None)
    return complex(coeffs[0])


def gamma2_limit(
    s0: complex,
    N_max: int = 4096,
    settings: EvalSettings | None = None,
) -> complex:
    """Limit definition, Richardson-accelerated over the inner cutoff.

    Needs Re s0 > 1 and N_max >= 1000.  Acceleration uses the known
    exponent ladder of the pre-limit sums; the residual gate compares
    against a rerun without the smallest cutoff.
    """
    settings = _settings(settings)
    s0 = complex(s0)
    if s0.real <= 1.0:
        raise DomainError("gamma2_limit needs Re s0 > 1")
    if N_max < 1000:
        raise DomainError("gamma2_limit needs N_max >= 1000")
    Ns = sorted({max(8, N_max >> k) for k in range(7)})
    vals = [_mean_gap_sum(s0, N) for N in Ns]
    limit = _accelerated_limit(s0, Ns, vals)
    check = _accelerated_limit(s0, Ns[1:], vals[1:])
    residual = abs(limit - check)
    if residual > max(100.0 * settings.tol, 1e-6) * max(1.0, abs(limit)):
        raise ConvergenceError(
            f"acceleration residual {residual:.3e} has not settled"
        )
    return limit


def gamma2_pole(s0: complex, settings: EvalSettings | None = None) -> complex:
    """Pole-subtraction definition: the constant term of the Laurent
    expansion at s = 1, extrapolated along s = 1 + delta."""
    settings = _settings(settings)
    s0 = complex(s0)
    if s0.real <= 1.0:
        raise DomainError("gamma2_pole needs Re s0 > 1")
    z0 = riemann_zeta(s0)
    deltas = [10.0 ** (-1.0 - 0.5 * k) for k in range(5)]  # 1e-1 .. 1e-3
    vals = [
        zeta2_eval(s0, 1.0 + d, settings).value - z0 / d for d in deltas
    ]
    limit, prev = _neville_to_zero(deltas, vals)
    if abs(limit - prev) > max(100.0 * settings.tol, 1e-6) * max(1.0, abs(limit)):
        raise ConvergenceError("pole extrapolation has not settled")
    return limit


def gamma2_closed(s0: complex, settings: EvalSettings | None = None) -> complex:
    """Closed form: zeta(s0) gamma - zeta2(1, s0) - zeta(s0 + 1)."""
    settings = _settings(settings)
    s0 = complex(s0)
    if s0.real <= 1.0:
        raise DomainError("gamma2_closed needs Re s0 > 1")
    harmonic_part = zeta2_direct(1.0, s0, settings).value
    return riemann_zeta(s0) * EULER_GAMMA - harmonic_part - riemann_zeta(s0 + 1.0)


def gamma2_routes(
    s0: complex,
    N_max: int = 4096,
    settings: EvalSettings | None = None,
) -> Gamma2Result:
    """All three routes plus their maximum pairwise disagreement."""
    a = gamma2_limit(s0, N_max, settings)
    b = gamma2_pole(s0, settings)
    c = gamma2_closed(s0, settings)
    spread = max(abs(a - b), abs(a - c), abs(b - c))
    return Gamma2Result(via_limit=a, via_pole=b, via_closed=c, spread=spread)
