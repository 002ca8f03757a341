"""Classical special functions needed by the evaluators.

Only what the package actually uses: log-gamma and digamma via Stirling
series after an upward recurrence lift, and the Riemann zeta function on
Re s > 0 via the same tail machinery used everywhere else.  log_gamma
values are correct modulo 2*pi*i (callers only exponentiate them or take
differences at nearby points, so the branch sheet never matters).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ._tails import BERN_OVER_FACT, hurwitz_tail, pow_range
from .errors import DomainError, PoleError

EULER_GAMMA = float(np.euler_gamma)

_LOG_2PI = math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)

# B_{2j} / (2j (2j-1)) for the Stirling series, j = 1..10
_STIRLING = tuple(
    BERN_OVER_FACT[j - 1] * math.factorial(2 * j) / (2 * j * (2 * j - 1))
    for j in range(1, 11)
)
# B_{2j} / (2j) for the digamma series, j = 1..10
_DIGAMMA = tuple(
    BERN_OVER_FACT[j - 1] * math.factorial(2 * j) / (2 * j) for j in range(1, 11)
)


def _log_sin_pi(z: complex) -> complex:
    """A logarithm of sin(pi z), stable for large |Im z|."""
    if z.imag >= 0:
        # sin(pi z) = (i/2) exp(-i pi z) (1 - exp(2 i pi z))
        return (
            -1j * math.pi * z
            + cmath.log(0.5j)
            + cmath.log(1.0 - cmath.exp(2j * math.pi * z))
        )
    return _log_sin_pi(z.conjugate()).conjugate()


def log_gamma(z: complex) -> complex:
    """A logarithm of Gamma(z); poles at nonpositive integers raise."""
    z = complex(z)
    if z.real < 0.5:
        if z.imag == 0.0 and z.real == int(z.real):
            raise PoleError(f"log_gamma pole at z = {z}")
        return _LOG_PI - _log_sin_pi(z) - log_gamma(1.0 - z)
    shift = 0.0 + 0.0j
    while z.real < 10.0:
        shift += cmath.log(z)
        z += 1.0
    w2 = 1.0 / (z * z)
    series = 0.0 + 0.0j
    wp = 1.0 / z
    for c in _STIRLING:
        series += c * wp
        wp *= w2
    return (z - 0.5) * cmath.log(z) - z + 0.5 * _LOG_2PI + series - shift


def digamma(z: complex) -> complex:
    """psi(z) = Gamma'(z)/Gamma(z); poles at nonpositive integers raise."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise PoleError(f"digamma pole at z = {z}")
    shift = 0.0 + 0.0j
    while z.real < 10.0:
        shift += 1.0 / z
        z += 1.0
    w2 = 1.0 / (z * z)
    series = 0.0 + 0.0j
    wp = w2
    for c in _DIGAMMA:
        series += c * wp
        wp *= w2
    return cmath.log(z) - 0.5 / z - series - shift


def riemann_zeta(s: complex) -> complex:
    """zeta(s) on Re s > 0, s != 1, by head sum plus continued tail."""
    s = complex(s)
    if s == 1.0:
        raise PoleError("zeta pole at s = 1")
    if s.real <= 0.0:
        raise DomainError("riemann_zeta is implemented for Re s > 0 only")
    head = complex(np.sum(pow_range(s, 1, 16)))
    tail, _ = hurwitz_tail(s, 17.0)
    return head + tail
