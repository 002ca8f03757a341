"""Truncated-sum approximants with measured error decay.

Each approximant keeps only elementary pieces of the four-term
decomposition (the truncated double sum, optionally minus the shifted
power sum) and records how far that falls from the fully continued
value.  The decay exponent of that gap, fitted over a grid of cutoffs,
is the quantity the acceptance checks compare against the predicted
three-case orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._tails import shifted_tail
from .continuation import _em_pieces, zeta2_eval
from .errors import DomainError, InsufficientDataError, PoleError
from .types import EvalSettings

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ApproxReport:
    approximant: complex
    reference: complex
    abs_error: float
    predicted_exponent: float
    predicted_log_power: int
    x_or_t: float

    def __post_init__(self) -> None:
        gap = abs(self.abs_error - abs(self.approximant - self.reference))
        if gap > 1e-15 * max(1.0, abs(self.reference)):
            raise ValueError("abs_error must equal |approximant - reference|")


def _em_predicted(s0: complex, s: complex) -> tuple[float, int]:
    if abs(s0.real - 1.0) < 1e-12:
        return -s.real, 1
    if s0.real > 1.0:
        return -s.real, 0
    return 1.0 - s0.real - s.real, 0


def _mb_predicted(s0: complex, s: complex) -> tuple[float, int]:
    if abs(s0.real - 1.0) < 1e-12:
        return -s.real, 1
    if s0.real < 1.0:
        return 1.0 - s0.real - s.real, 0
    return -s.real, 0


def approx_em(
    s0: complex,
    s: complex,
    x: float,
    c_window: float = _TWO_PI,
    settings: EvalSettings | None = None,
) -> ApproxReport:
    """Cutoff approximant: truncated double sum minus the shifted power sum.

    Hypotheses: Re s > max(0, 2 - Re s0), c_window > 1, |Im s| bounded by
    2 pi x / c_window, s != 1.  The gap to the continued value decays
    like x^(-sigma) (Re s0 > 1, with a log at Re s0 = 1) or
    x^(1 - sigma0 - sigma) (Re s0 < 1).
    """
    settings = settings if settings is not None else EvalSettings()
    s0 = complex(s0)
    s = complex(s)
    x = float(x)
    if c_window <= 1.0:
        raise DomainError("approx_em needs c_window > 1")
    if s == 1.0:
        raise PoleError("approx_em is undefined at s = 1")
    if not s.real > max(0.0, 2.0 - s0.real):
        raise DomainError(
            f"approx_em needs Re s > max(0, 2 - Re s0); got s0={s0}, s={s}"
        )
    if x < 1.0:
        raise DomainError("approx_em needs x >= 1")
    if abs(s.imag) > _TWO_PI * x / c_window:
        raise DomainError("approx_em needs |Im s| <= 2 pi x / c_window")

    A1, _A3, _A4, pm, M, _bound, _terms = _em_pieces(s0, s, x, settings)
    m = np.arange(1, M + 1, dtype=np.float64)
    head2 = complex(np.dot(pm, np.exp((1.0 - s) * np.log(m + x))))
    t2, _e2 = shifted_tail(s0, s - 1.0, x, M)
    approximant = A1 - (head2 + t2) / (1.0 - s)
    reference = zeta2_eval(s0, s, settings).value
    expo, logp = _em_predicted(s0, s)
    return ApproxReport(
        approximant=approximant,
        reference=reference,
        abs_error=abs(approximant - reference),
        predicted_exponent=expo,
        predicted_log_power=logp,
        x_or_t=x,
    )


def approx_mb(
    s0: complex,
    s: complex,
    settings: EvalSettings | None = None,
) -> ApproxReport:
    """Bare truncated double sum with the inner cutoff tied to the height.

    Keeps sum_m sum_{n <= t} m^(-s0) (m+n)^(-s) with t = Im s >= 2; no
    correction terms at all.  Valid where the contour continuation is:
    0 < Re s0 < 3/2, Re s > 1/2, Re(s0+s) > 1, off the singular set.
    """
    settings = settings if settings is not None else EvalSettings()
    s0 = complex(s0)
    s = complex(s)
    t = s.imag
    if t < 2.0:
        raise DomainError("approx_mb needs Im s >= 2")
    if not (0.0 < s0.real < 1.5 and s.real > 0.5 and (s0 + s).real > 1.0):
        raise DomainError(
            f"approx_mb needs 0 < Re s0 < 3/2, Re s > 1/2, Re(s0+s) > 1; got s0={s0}, s={s}"
        )
    reference = zeta2_eval(s0, s, settings).value  # raises SingularError on the locus
    A1, _A3, _A4, _pm, _M, _bound, _terms = _em_pieces(s0, s, float(math.floor(t)), settings)
    expo, logp = _mb_predicted(s0, s)
    return ApproxReport(
        approximant=A1,
        reference=reference,
        abs_error=abs(A1 - reference),
        predicted_exponent=expo,
        predicted_log_power=logp,
        x_or_t=t,
    )


def error_exponent_fit(reports: list[ApproxReport]) -> float:
    """Least-squares decay exponent of abs_error over a cutoff grid.

    Log-power factors are divided out first, so the slope is directly
    comparable to the predicted exponent.  Needs at least 5 reports with
    strictly increasing x_or_t spanning 1.5 decades or more.
    """
    if len(reports) < 5:
        raise InsufficientDataError("need at least 5 reports")
    xs = [r.x_or_t for r in reports]
    for a, b in zip(xs, xs[1:]):
        if not b > a:
            raise InsufficientDataError("x_or_t must be strictly increasing")
    if xs[-1] < xs[0] * 10**1.5:
        raise InsufficientDataError("grid must span at least 1.5 decades")
    lx = np.array([math.log(x) for x in xs])
    ly = np.empty(len(reports))
    for i, r in enumerate(reports):
        err = max(r.abs_error, 1e-300)
        ly[i] = math.log(err) - r.predicted_log_power * math.log(math.log(r.x_or_t))
    lx_c = lx - lx.mean()
    return float(np.dot(lx_c, ly - ly.mean()) / np.dot(lx_c, lx_c))
