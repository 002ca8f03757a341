"""Double zeta values inside the region of absolute convergence.

The double sum is arranged by outer index k with inner prefix
P(k) = sum_{m<k} m^(-s0), so

    zeta2(s0, s)    = sum_{k>=2} P(k) k^(-s)
    zeta2_sq(s0, s) = sum_{k>=2} |P(k)|^2 k^(-s)

Heads are summed literally from cumulative prefixes.  Tails replace P(k)
by zeta(s0) - hurwitz_tail(s0, k) and push every resulting k-power,
including the asymptotic correction terms of the tail and (for the
squared variant) all bilinear cross products, through the same certified
tail primitive.  At s0 = 1 the prefix is a harmonic number and the same
scheme runs on its logarithmic expansion instead.

est_error on the results adds every certified tail bound to a crude
roundoff allowance; it is a budget, not a sharp estimate.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from ._tails import _BERN_EVEN, BERN_OVER_FACT, KahanSum, hurwitz_tail, pow_range
from .errors import ConvergenceError, DomainError
from .types import ROUTE_DIRECT, EvalResult, EvalSettings

_EPS = 2.22e-16

# Coefficients of H_{k-1} - log k - gamma as powers k^(-n), exact.
# H_k ~ log k + gamma + 1/(2k) - sum_j B_{2j}/(2j) k^(-2j); subtract 1/k.
_E_COEFFS: dict[int, Fraction] = {1: Fraction(-1, 2)}
for _j in range(1, 5):
    _E_COEFFS[2 * _j] = -_BERN_EVEN[_j - 1] / (2 * _j)
_E_REM_POW = 10
_E_REM_COEF = abs(float(_BERN_EVEN[4] / 10))  # next omitted |B_10/10| k^(-10)

# (E * E)(k) for the squared harmonic prefix, truncated at the same order
_E2_COEFFS: dict[int, Fraction] = {}
for _p, _c in _E_COEFFS.items():
    for _q, _d in _E_COEFFS.items():
        if _p + _q < _E_REM_POW:
            _E2_COEFFS[_p + _q] = _E2_COEFFS.get(_p + _q, Fraction(0)) + _c * _d
_E2_REM_COEF = 0.05  # dominated by 2*|E_1|*|rem|, padded


def _require_settings(settings: EvalSettings | None) -> EvalSettings:
    return settings if settings is not None else EvalSettings()


def zeta_continued(s: complex) -> complex:
    """zeta(s) for s != 1 via head plus continued tail (any Re s > -20)."""
    head = complex(np.sum(pow_range(s, 1, 16)))
    tail, _ = hurwitz_tail(complex(s), 17.0)
    return head + tail


def _head_length(s0: complex, s: complex, settings: EvalSettings) -> int:
    K = max(64, int(math.ceil(0.55 * (abs(s0) + abs(s)))) + 32)
    if K > settings.k_cutoff:
        raise ConvergenceError(
            f"outer head needs {K} terms, k_cutoff is {settings.k_cutoff}"
        )
    return K

def _prefix_expansion(s0: complex, K: int):
    """Expansion zeta(s0) - hurwitz_tail(s0, k) = zeta(s0) - sum_i c_i k^(-b_i).

    Returns (c, b, rem_coef, rem_pow): coefficient list, exponent list and
    a bound rem_coef * k^(-rem_pow) for the dropped part, valid k > K.
    """
    c: list[complex] = [1.0 / (s0 - 1.0), 0.5]
    b: list[complex] = [s0 - 1.0, s0]
    poch = s0
    kk = float(K + 1)
    prev = math.inf
    j = 1
    while j <= len(BERN_OVER_FACT) - 1:
        coef = BERN_OVER_FACT[j - 1] * poch
        mag = abs(coef) * kk ** (-(s0.real + 2 * j - 1))
        if mag >= prev:
            break
        c.append(coef)
        b.append(s0 + (2 * j - 1))
        prev = mag
        if mag < 1e-20:
            j += 1
            break
        poch = poch * (s0 + (2 * j - 1)) * (s0 + 2 * j)
        j += 1
    nxt = BERN_OVER_FACT[min(j, len(BERN_OVER_FACT)) - 1] * poch
    rem_coef = 4.0 * abs(nxt)  # slack for the non-monotone remainder factor
    rem_pow = s0.real + 2 * j - 1
    return c, b, rem_coef, rem_pow


def zeta2_direct(
    s0: complex, s: complex, settings: EvalSettings | None = None
) -> EvalResult:
    """Evaluate zeta2(s0, s) where the double series converges absolutely.

    Requires Re s > 1 and Re(s0 + s) > 2 (strict); raises DomainError
    otherwise.  Always reports route "Direct".
    """
    settings = _require_settings(settings)
    s0 = complex(s0)
    s = complex(s)
    if not (s.real > 1.0 and (s0 + s).real > 2.0):
        raise DomainError(
            "zeta2_direct needs Re s > 1 and Re(s0+s) > 2; "
            f"got s0={s0}, s={s}"
        )
    K = _head_length(s0, s, settings)
    err = KahanSum()

    m = np.arange(1, K, dtype=np.float64)
    prefixes = np.cumsum(np.exp(-s0 * np.log(m)))
    ks = np.arange(2, K + 1, dtype=np.float64)
    head_terms = prefixes * np.exp(-s * np.log(ks))
    head = complex(np.sum(head_terms))
    err.add(K * _EPS * float(np.max(np.abs(head_terms))))
    A = float(K + 1)

    if s0 == 1.0:
        # P(k) = H_{k-1} = log k + gamma + E(k)
        z1, b1 = hurwitz_tail(s, A, p=1)
        z0, b0 = hurwitz_tail(s, A)
        gamma = float(np.euler_gamma)
        tail = KahanSum(z1 + gamma * z0)
        err.add(b1 + gamma * b0)
        for pw, cf in sorted(_E_COEFFS.items()):
            zp, bp = hurwitz_tail(s + pw, A)
            tail.add(float(cf) * zp)
            err.add(abs(float(cf)) * bp)
        zr, br = hurwitz_tail(s.real + _E_REM_POW, A)
        err.add(_E_REM_COEF * (abs(zr) + br))
        total = head + tail.value
        terms = K + len(_E_COEFFS) + 2
    else:
        zs0 = zeta_continued(s0)
        c, b, rem_coef, rem_pow = _prefix_expansion(s0, K)
        z0, b0 = hurwitz_tail(s, A)
        tail = KahanSum(zs0 * z0)
        err.add(abs(zs0) * b0)
        # near the s0 = 1 pole both pieces blow up and cancel; budget it
        err.add(_EPS * abs(zs0) * (abs(z0) + 1.0))
        for ci, bi in zip(c, b):
            zi, bnd = hurwitz_tail(s + bi, A)
            tail.add(-ci * zi)
            err.add(abs(ci) * bnd)
        zr, br = hurwitz_tail(s.real + rem_pow, A)
        err.add(rem_coef * (abs(zr) + br))
        total = head + tail.value
        terms = K + len(c) + 1

    return EvalResult(
        value=total, est_error=err.value, route=ROUTE_DIRECT, terms_used=terms
    )


def zeta2_sq(
    s0: complex, s: complex, settings: EvalSettings | None = None
) -> EvalResult:
    """Evaluate sum_{k>=2} |sum_{m<k} m^(-s0)|^2 k^(-s).

    Convergence region (strict): Re s0 >= 1 and Re s > 1, or Re s0 < 1
    and 2 Re s0 + Re s > 3.  This is the mean-square coefficient series;
    the mean value theorems use it at s = 2 sigma.
    """
    settings = _require_settings(settings)
    s0 = complex(s0)
    s = complex(s)
    ok = (s0.real >= 1.0 and s.real > 1.0) or (
        s0.real < 1.0 and 2.0 * s0.real + s.real > 3.0
    )
    if not ok:
        raise DomainError(
            f"zeta2_sq series diverges at s0={s0}, s={s}"
        )
    K = _head_length(s0, s, settings)
    err = KahanSum()

    m = np.arange(1, K, dtype=np.float64)
    prefixes = np.cumsum(np.exp(-s0 * np.log(m)))
    ks = np.arange(2, K + 1, dtype=np.float64)
    head_terms = (prefixes.real**2 + prefixes.imag**2) * np.exp(-s * np.log(ks))
    head = complex(np.sum(head_terms))
    err.add(K * _EPS * float(np.max(np.abs(head_terms))))
    A = float(K + 1)
    n_tail = 0

    if s0 == 1.0:
        gamma = float(np.euler_gamma)
        z2, e2 = hurwitz_tail(s, A, p=2)
        z1, e1 = hurwitz_tail(s, A, p=1)
        z0, e0 = hurwitz_tail(s, A)
        tail = KahanSum(z2 + 2.0 * gamma * z1 + gamma * gamma * z0)
        err.add(e2 + 2.0 * gamma * e1 + gamma * gamma * e0)
        for pw, cf in sorted(_E_COEFFS.items()):
            zp1, ep1 = hurwitz_tail(s + pw, A, p=1)
            zp0, ep0 = hurwitz_tail(s + pw, A)
            tail.add(2.0 * float(cf) * (zp1 + gamma * zp0))
            err.add(2.0 * abs(float(cf)) * (ep1 + gamma * ep0))
        for pw, cf in sorted(_E2_COEFFS.items()):
            zp0, ep0 = hurwitz_tail(s + pw, A)
            tail.add(float(cf) * zp0)
            err.add(abs(float(cf)) * ep0)
        zr1, er1 = hurwitz_tail(s.real + _E_REM_POW, A, p=1)
        zr0, er0 = hurwitz_tail(s.real + _E_REM_POW, A)
        err.add(2.0 * _E_REM_COEF * (abs(zr1) + er1))
        err.add((2.0 * gamma * _E_REM_COEF + _E2_REM_COEF) * (abs(zr0) + er0))
        total = head + tail.value
        n_tail = 3 + 3 * len(_E_COEFFS) + len(_E2_COEFFS)
    else:
        zs0 = zeta_continued(s0)
        zs0c = zs0.conjugate()
        s0c = s0.conjugate()
        c, b, rem_coef, rem_pow = _prefix_expansion(s0, K)
        cc = [x.conjugate() for x in c]
        bc = [x.conjugate() for x in b]
        z0, e0 = hurwitz_tail(s, A)
        tail = KahanSum(abs(zs0) ** 2 * z0)
        err.add(abs(zs0) ** 2 * e0)
        err.add(_EPS * abs(zs0) ** 2 * (abs(z0) + 1.0))
        # cross terms: -zs0bar*Sum zh(s0,k) k^-s  - zs0*Sum zh(s0bar,k) k^-s
        for zc, cl, bl in ((zs0c, c, b), (zs0, cc, bc)):
            for ci, bi in zip(cl, bl):
                zi, bnd = hurwitz_tail(s + bi, A)
                tail.add(-zc * ci * zi)
                err.add(abs(zc) * abs(ci) * bnd)
                n_tail += 1
        # bilinear |zh(s0,k)|^2 part
        for ci, bi in zip(c, b):
            for cj, bj in zip(cc, bc):
                zi, bnd = hurwitz_tail(s + bi + bj, A)
                tail.add(ci * cj * zi)
                err.add(abs(ci) * abs(cj) * bnd)
                n_tail += 1
        # dropped expansion remainders, crudely dominated
        mags = sum(abs(ci) for ci in c)
        zr, br = hurwitz_tail(s.real + rem_pow + s0.real - 1.0, A)
        zr2, br2 = hurwitz_tail(s.real + rem_pow, A)
        err.add(2.0 * rem_coef * (abs(zs0) * (abs(zr2) + br2) + mags * (abs(zr) + br)))
        total = head + tail.value

    return EvalResult(
        value=total, est_error=err.value, route=ROUTE_DIRECT, terms_used=K + n_tail
    )


def stuffle_residual(
    s0: complex, s: complex, settings: EvalSettings | None = None
) -> float:
    """|zeta(s0) zeta(s) - zeta2(s0,s) - zeta2(s,s0) - zeta(s0+s)|.

    The harmonic product of two zeta values equals the two interleavings
    plus the diagonal, so this residual is zero in exact arithmetic; both
    orderings must lie in the absolutely convergent region.
    """
    settings = _require_settings(settings)
    s0 = complex(s0)
    s = complex(s)
    lhs = zeta_continued(s0) * zeta_continued(s) - zeta_continued(s0 + s)
    a = zeta2_direct(s0, s, settings).value
    c = zeta2_direct(s, s0, settings).value
    return abs(lhs - a - c)
