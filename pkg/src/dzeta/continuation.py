"""Continuation of the double zeta series beyond absolute convergence.

Two routes, sharing most of their machinery.  The first splits the inner
sum at a cutoff and applies Euler-Maclaurin to the remainder, producing
four pieces

    A1 (truncated double sum) - A2 (shifted power sum)
    - A3 (sawtooth integrals) - A4 (boundary terms),

valid for Re s > 0 and Re(s0+s) > 2.  The second route keeps A1, A3, A4
and replaces A2 by its own continuation: a smooth tail integral split
into two pole residues plus a contour integral on Re z = 1/2, together
with sawtooth and endpoint corrections.  That pushes validity down to
Re s > 1/2, Re(s0+s) > 1 for 0 < Re s0 < 3/2.

Quadrature panel layouts depend on sign(Im s), so the functions that
integrate numerically canonicalize to Im s >= 0 and conjugate back;
everything else is conjugation-equivariant term by term.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._quad import gl_nodes
from ._tails import BERN_OVER_FACT, KahanSum, hurwitz_tail, shifted_tail
from .core import _prefix_expansion, zeta2_direct, zeta_continued
from .errors import ConvergenceError, DomainError, PoleError, SingularError
from .special import EULER_GAMMA, digamma, log_gamma
from .types import ROUTE_EM, ROUTE_MB, EvalResult, EvalSettings, RegionClass

_EPS = 2.22e-16
_LOG_2PI = math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)

_STIRLING = tuple(
    BERN_OVER_FACT[j - 1] * math.factorial(2 * j) / (2 * j * (2 * j - 1))
    for j in range(1, 11)
)


def _settings(settings: EvalSettings | None) -> EvalSettings:
    return settings if settings is not None else EvalSettings()


# ---------------------------------------------------------------------------
# region classification

def singular_distance(s0: complex, s: complex) -> float:
    """Distance to the nearest singular point: s = 1 or s0+s integer <= 2."""
    s0 = complex(s0)
    s = complex(s)
    w = s0 + s
    q = min(2, int(round(w.real)))
    return min(abs(s - 1.0), abs(w - q))


def classify_region(
    s0: complex, s: complex, settings: EvalSettings | None = None
) -> RegionClass:
    """Classify an argument pair; singular exclusion wins, then the
    strongest convergence statement that applies."""
    settings = _settings(settings)
    s0 = complex(s0)
    s = complex(s)
    if singular_distance(s0, s) < settings.singular_radius:
        return RegionClass.SINGULAR
    sig0, sig = s0.real, s.real
    if sig > 1.0 and sig0 + sig > 2.0:
        return RegionClass.ABSOLUTELY_CONVERGENT
    if sig > 0.0 and sig0 + sig > 2.0:
        return RegionClass.EM_STRIP
    if 0.0 < sig0 < 1.5 and sig > 0.5 and sig0 + sig > 1.0:
        return RegionClass.MB_STRIP
    return RegionClass.OUT_OF_DOMAIN


# ---------------------------------------------------------------------------
# vectorized log-gamma (contour integrands evaluate thousands of points)

def _log_sin_pi_arr(z: np.ndarray) -> np.ndarray:
    up = z.imag >= 0
    zu = np.where(up, z, z.conj())
    val = (
        -1j * math.pi * zu
        + cmath.log(0.5j)
        + np.log1p(-np.exp(2j * math.pi * zu))
    )
    return np.where(up, val, val.conj())


def _log_gamma_arr(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=np.complex128)
    out = np.empty_like(z)
    refl = z.real < 0.5
    if refl.any():
        zr = z[refl]
        out[refl] = _LOG_PI - _log_sin_pi_arr(zr) - _log_gamma_arr(1.0 - zr)
    rest = ~refl
    w = z[rest]
    shift = np.zeros_like(w)
    for _ in range(10):
        low = w.real < 10.0
        if not low.any():
            break
        shift[low] += np.log(w[low])
        w = np.where(low, w + 1.0, w)
    inv = 1.0 / w
    inv2 = inv * inv
    series = np.zeros_like(w)
    wp = inv.copy()
    for c in _STIRLING:
        series += c * wp
        wp = wp * inv2
    out[rest] = (w - 0.5) * np.log(w) - w + 0.5 * _LOG_2PI + series - shift
    return out


# ---------------------------------------------------------------------------
# sawtooth integrals  saw(y) = y - [y] - 1/2

def _saw_closed(alpha, beta, fl, s: complex):
    """int_alpha^beta (y - fl - 1/2) y^(-s-1) dy, closed form.

    Valid while [alpha, beta] stays inside one unit interval with integer
    part fl.  Vectorized over alpha/beta/fl.  Needs Re s > 0 only for the
    caller's tails, the antiderivative itself is fine for any s != 0.
    """
    la = np.log(alpha)
    lb = np.log(beta)
    if s == 1.0:
        piece1 = lb - la
    else:
        piece1 = (np.exp((1.0 - s) * lb) - np.exp((1.0 - s) * la)) / (1.0 - s)
    piece2 = (fl + 0.5) * (np.exp(-s * lb) - np.exp(-s * la)) / s
    return piece1 + piece2


def _saw_tail_coeffs(s: complex, a_ref: float):
    """Asymptotic tail int_a^inf saw(y) y^(-s-1) dy = sum_j c_j a^(-beta_j),

    for integer a >= a_ref, with c_j = -B_{2j}/(2j)! (s+1)_{2j-2} and
    beta_j = s + 2j - 1.  Returns (coeffs, betas, rem_coef, rem_beta); the
    dropped part is bounded by rem_coef * a^(-Re rem_beta).
    """
    coeffs: list[complex] = []
    betas: list[complex] = []
    poch = 1.0 + 0.0j  # (s+1)_{2j-2}
    prev = math.inf
    j = 1
    while j <= 14:
        c = -BERN_OVER_FACT[j - 1] * poch
        mag = abs(c) * a_ref ** (-(s.real + 2 * j - 1))
        if mag >= prev:
            break
        coeffs.append(c)
        betas.append(s + (2 * j - 1))
        prev = mag
        poch = poch * (s + (2 * j - 1)) * (s + 2 * j)
        if mag < 1e-22:
            j += 1
            break
        j += 1
    rem_coef = 4.0 * abs(BERN_OVER_FACT[min(j, 28) - 1] * poch)
    rem_beta = s.real + 2 * j - 1
    return coeffs, betas, rem_coef, rem_beta


def _saw_integral_single(a: float, s: complex) -> tuple[complex, float]:
    ca = math.ceil(a)
    cut = ca + max(200, int(math.ceil(0.55 * abs(s))) + 32)
    val = KahanSum()
    if ca > a:
        val.add(complex(_saw_closed(a, float(ca), float(math.floor(a)), s)))
    ks = np.arange(ca, cut, dtype=np.float64)
    J = _saw_closed(ks, ks + 1.0, ks, s)
    val.add(complex(np.sum(J)))
    coeffs, betas, rem_coef, rem_beta = _saw_tail_coeffs(s, float(cut))
    for c, b in zip(coeffs, betas):
        val.add(c * cut ** (-b))
    bound = rem_coef * cut ** (-rem_beta)
    bound += _EPS * float(np.sum(np.abs(J))) * math.sqrt(len(J))
    return val.value, bound


def em_sawtooth_integral(a: float, s: complex) -> complex:
    """int_a^inf (y - [y] - 1/2) y^(-s-1) dy for a >= 1, Re s > 0."""
    s = complex(s)
    if a < 1.0:
        raise DomainError("em_sawtooth_integral needs a >= 1")
    if s.real <= 0.0:
        raise DomainError("em_sawtooth_integral needs Re s > 0")
    value, _ = _saw_integral_single(float(a), s)
    return value


def _saw_vector(x: float, s: complex, M: int) -> tuple[np.ndarray, float]:
    """I(m+x) for m = 1..M where I(a) = int_a^inf saw(y) y^(-s-1) dy.

    One shared pass: per-interval closed forms are suffix-summed (the
    integer grid is common to all m), with the asymptotic tail attached
    at the far cutoff.  Returns (values, per-entry error bound).
    """
    fx = math.floor(x + 1e-12)
    frac = x - fx
    m = np.arange(1, M + 1, dtype=np.float64)
    if frac == 0.0:
        cut = int(x) + M + 1
        ks = np.arange(int(x) + 1, cut, dtype=np.float64)
        J = _saw_closed(ks, ks + 1.0, ks, s)
        suffix = np.cumsum(J[::-1])[::-1]
        vals = suffix.astype(np.complex128)
    else:
        cut = fx + 1 + M
        partial = _saw_closed(m + x, m + (fx + 1.0), m + fx, s)
        ks = np.arange(fx + 2, cut, dtype=np.float64)
        J = _saw_closed(ks, ks + 1.0, ks, s)
        suffix = np.concatenate([np.cumsum(J[::-1])[::-1], [0.0 + 0.0j]])
        vals = partial + suffix
    coeffs, betas, rem_coef, rem_beta = _saw_tail_coeffs(s, float(cut))
    far = 0.0 + 0.0j
    for c, b in zip(coeffs, betas):
        far += c * float(cut) ** (-b)
    vals = vals + far
    bound = rem_coef * float(cut) ** (-rem_beta)
    bound += _EPS * float(np.sum(np.abs(J)))
    return vals, bound


# ---------------------------------------------------------------------------
# shared A-pieces of the four-term decomposition

def _em_pieces(s0: complex, s: complex, x: float, settings: EvalSettings):
    """A1, A3, A4 at inner cutoff x (>= 1, real), plus shared state.

    Returns (A1, A3, A4, pm, M, bound, terms).  pm is the m-head power
    array, reused by the A2 variants.  bound collects every certified
    tail and roundoff allowance for the three pieces.
    """
    Nn = int(math.floor(x + 1e-12))
    frac = x - Nn
    M = max(64, int(math.ceil(0.55 * (abs(s0) + abs(s)))) + 32)
    if Nn > M // 2:
        M = max(M, 2 * Nn + 8)  # binomial m-tails need m > x comfortably
    if M > settings.m_cutoff:
        raise ConvergenceError(
            f"m-head needs {M} terms, m_cutoff is {settings.m_cutoff}"
        )
    err = KahanSum()
    m = np.arange(1, M + 1, dtype=np.float64)
    pm = np.exp(-s0 * np.log(m))
    pm_abs = float(np.sum(np.abs(pm)))

    # A1 head: W[m] = sum_{n<=Nn} (m+n)^(-s) from one cumulative pass
    lgrid = np.arange(1, M + Nn + 1, dtype=np.float64)
    cs = np.cumsum(np.exp(-s * np.log(lgrid)))
    W = cs[Nn : Nn + M] - cs[0:M]
    A1 = KahanSum(complex(np.dot(pm, W)))
    err.add(_EPS * (M + Nn) * float(np.max(np.abs(cs))) * pm_abs)
    # A1 tail: expand sum_{n<=Nn}(m+n)^(-s) = tail(s, m+1) - tail(s, m+Nn+1)
    c1, b1, rem1, rpow1 = _prefix_expansion(s, M + 1)
    for ci, bi in zip(c1, b1):
        t_lo, e_lo = shifted_tail(s0, bi, 1.0, M)
        t_hi, e_hi = shifted_tail(s0, bi, float(Nn + 1), M)
        A1.add(ci * (t_lo - t_hi))
        err.add(abs(ci) * (e_lo + e_hi))
    r_lo, re_lo = shifted_tail(s0.real, rpow1, 1.0, M)
    r_hi, re_hi = shifted_tail(s0.real, rpow1, float(Nn + 1), M)
    err.add(rem1 * (abs(r_lo) + re_lo + abs(r_hi) + re_hi))

    # A4 head+tail, weight accounts for a non-integer cutoff
    w4 = 0.5 - frac
    pmx = np.exp(-s * np.log(m + x))
    t4, e4 = shifted_tail(s0, s, x, M)
    A4 = w4 * (complex(np.dot(pm, pmx)) + t4)
    err.add(abs(w4) * (e4 + _EPS * M * pm_abs))

    # A3 head from the shared sawtooth pass
    I_vec, ib = _saw_vector(x, s, M)
    A3 = KahanSum(complex(np.dot(pm, I_vec)))
    err.add(abs(s) * (ib * pm_abs + _EPS * float(np.sum(np.abs(I_vec) * np.abs(pm)))))
    # A3 m-tail: asymptotic sawtooth expansion pushed through shifted tails
    cxf = float(Nn + 1) if frac > 0.0 else x
    coeffs, betas, rem_coef, rem_beta = _saw_tail_coeffs(s, float(M + 1))
    for c, b in zip(coeffs, betas):
        tv, te = shifted_tail(s0, b, cxf, M)
        A3.add(c * tv)
        err.add(abs(s) * (abs(c) * te))
    rv, rve = shifted_tail(s0.real, rem_beta, cxf, M)
    err.add(abs(s) * rem_coef * (abs(rv) + rve))
    if frac > 0.0:
        # partial first interval of each I(m+x), expanded exactly
        fl = float(Nn)
        q1, q1e = shifted_tail(s0, s - 1.0, cxf, M)
        q2, q2e = shifted_tail(s0, s - 1.0, x, M)
        q3, q3e = shifted_tail(s0, s, cxf, M)
        q4, q4e = shifted_tail(s0, s, x, M)
        A3.add((q1 - q2) / (s * (1.0 - s)))
        A3.add(((fl - cxf + 0.5) * q3 - (fl - x + 0.5) * q4) / s)
        err.add(abs(s) * (q1e + q2e) / abs(s * (1.0 - s)))
        err.add(q3e + q4e)
    A3_val = s * A3.value

    terms = M * 2 + Nn + len(c1) + len(coeffs)
    return complex(A1.value), A3_val, A4, pm, M, err.value, terms


def zeta2_em(
    s0: complex,
    s: complex,
    N: int | None = None,
    settings: EvalSettings | None = None,
) -> EvalResult:
    """Double zeta via the four-piece decomposition at inner cutoff N.

    Valid for Re s > 0 and Re(s0+s) > 2 with s != 1.  The value is
    independent of N; N only moves work between the pieces.
    """
    settings = _settings(settings)
    s0 = complex(s0)
    s = complex(s)
    if N is None:
        N = settings.n_cutoff
    if N < 1:
        raise DomainError("zeta2_em needs N >= 1")
    if s == 1.0 or abs(s - 1.0) < settings.singular_radius:
        raise PoleError("zeta2_em is undefined at s = 1")
    if not (s.real > 0.0 and (s0 + s).real > 2.0):
        raise DomainError(
            f"zeta2_em needs Re s > 0 and Re(s0+s) > 2; got s0={s0}, s={s}"
        )
    x = float(N)
    A1, A3, A4, pm, M, bound, terms = _em_pieces(s0, s, x, settings)
    err = KahanSum(bound)
    m = np.arange(1, M + 1, dtype=np.float64)
    head2 = complex(np.dot(pm, np.exp((1.0 - s) * np.log(m + x))))
    t2, e2 = shifted_tail(s0, s - 1.0, x, M)
    A2 = (head2 + t2) / (1.0 - s)
    err.add((e2 + _EPS * M * float(np.sum(np.abs(pm)))) / abs(1.0 - s))
    value = A1 - A2 - A3 - A4
    est = err.value
    if est > settings.tol:
        raise ConvergenceError(
            f"certified error {est:.3e} exceeds tol {settings.tol:.1e}"
        )
    return EvalResult(value=value, est_error=est, route=ROUTE_EM, terms_used=terms + M)


# ---------------------------------------------------------------------------
# Mellin-Barnes machinery

def _conj_canonical(s0: complex, s: complex) -> bool:
    """Contour panel layouts depend on sign(Im); fold to the upper case."""
    return s.imag < 0.0 or (s.imag == 0.0 and s0.imag < 0.0)


def mellin_barnes_pow(
    lam: complex,
    s: complex,
    c: float,
    settings: EvalSettings | None = None,
) -> complex:
    """(1+lam)^(-s) as a contour integral over Re z = c.

    Needs Re s > 0, lam != 0 with |arg lam| < pi, and -Re s < c < 0.
    Direct numerical transcription of the binomial-kernel identity; used
    to cross-check the tail continuation against an elementary target.
    """
    settings = _settings(settings)
    lam = complex(lam)
    s = complex(s)
    if s.real <= 0.0:
        raise DomainError("mellin_barnes_pow needs Re s > 0")
    if lam == 0.0:
        raise DomainError("mellin_barnes_pow needs lam != 0")
    arg = abs(cmath.phase(lam))
    if arg >= math.pi:
        raise DomainError("mellin_barnes_pow needs |arg lam| < pi")
    if not (-s.real < c < 0.0):
        raise DomainError("mellin_barnes_pow needs -Re s < c < 0")
    if s.imag < 0.0 or (s.imag == 0.0 and lam.imag < 0.0):
        return mellin_barnes_pow(lam.conjugate(), s.conjugate(), c, settings).conjugate()

    t = s.imag
    log_lam = cmath.log(lam)
    rate = max(0.35, math.pi - arg)
    H = max(settings.contour_half_height, abs(t) + 40.0, abs(t) + 34.0 / rate)
    lg_s = log_gamma(s)

    base = 10.0 / (1.0 + abs(log_lam.real))
    spikes = ((-t, s.real + c), (0.0, -c))
    edges = [-H]
    y = -H
    while y < H:
        w = min(2.0, base / (1.0 + 0.08 * math.log(2.0 + abs(t + y) + abs(y))))
        for yc, d in spikes:
            w = min(w, max(0.55 * d, 0.4 * abs(y - yc)))
        y = min(y + w, H)
        edges.append(y)
    edges_arr = np.asarray(edges)

    x12, w12 = gl_nodes(12)
    x6, w6 = gl_nodes(6)

    def _flat(xn, wn):
        mid = 0.5 * (edges_arr[1:] + edges_arr[:-1])
        half = 0.5 * (edges_arr[1:] - edges_arr[:-1])
        ys = (mid[:, None] + half[:, None] * xn[None, :]).ravel()
        ws = (half[:, None] * wn[None, :]).ravel()
        return ys, ws

    def _integrand(ys):
        z = c + 1j * ys
        expo = (
            _log_gamma_arr(s + z)
            + _log_gamma_arr(-z)
            - lg_s
            + z * log_lam
        )
        return np.exp(expo)

    ys12, ws12 = _flat(x12, w12)
    f12 = _integrand(ys12)
    ys6, ws6 = _flat(x6, w6)
    f6 = _integrand(ys6)
    total = complex(np.dot(ws12, f12))
    return total / (2.0 * math.pi)


@dataclass(frozen=True)
class TailIntegralParts:
    """Continuation of the smooth tail integral, split by origin.

    residue_origin and residue_shifted are the two pole contributions
    picked up when the contour moves to Re z = 1/2; contour is what is
    left on that line.  contour_bound certifies truncation plus panel
    error of the contour piece.
    """

    residue_origin: complex
    residue_shifted: complex
    contour: complex
    x: float
    contour_bound: float

    def __post_init__(self) -> None:
        if not self.contour_bound >= 0.0:
            raise ValueError("contour_bound must be nonnegative")

    @property
    def total(self) -> complex:
        return self.residue_origin + self.residue_shifted + self.contour


def tail_integral(
    s0: complex,
    s: complex,
    x: float,
    settings: EvalSettings | None = None,
) -> TailIntegralParts:
    """Continued value of (1-s)^(-1) int_1^inf y^(-s0) (y+x)^(1-s) dy.

    Valid for 0 < Re s0 < 3/2 and Re s > 1/2 away from the singular
    set.  Inside Re(s0+s) > 2 the integral converges classically and the
    three pieces reproduce it; below, they define the continuation.
    """
    settings = _settings(settings)
    s0 = complex(s0)
    s = complex(s)
    x = float(x)
    if x < 1.0:
        raise DomainError("tail_integral needs x >= 1")
    if not (0.0 < s0.real < 1.5 and s.real > 0.5):
        raise DomainError(
            f"tail_integral needs 0 < Re s0 < 3/2 and Re s > 1/2; got s0={s0}, s={s}"
        )
    if singular_distance(s0, s) < settings.singular_radius:
        raise SingularError(f"(s0, s) = ({s0}, {s}) is within singular_radius of a singular point")
    if _conj_canonical(s0, s):
        parts = tail_integral(s0.conjugate(), s.conjugate(), x, settings)
        return TailIntegralParts(
            residue_origin=parts.residue_origin.conjugate(),
            residue_shifted=parts.residue_shifted.conjugate(),
            contour=parts.contour.conjugate(),
            x=x,
            contour_bound=parts.contour_bound,
        )

    log_x = math.log(x)
    pref = x ** (1.0 - s) / (1.0 - s)
    if abs(s0 - 1.0) < settings.singular_radius:
        # double pole pinch at s0 = 1: the two residues merge into a
        # digamma expression, evaluated exactly at the limit
        r1 = pref * (log_x - EULER_GAMMA - digamma(s - 1.0))
        r2 = 0.0 + 0.0j
    else:
        r1 = pref / (s0 - 1.0)
        r2 = (
            x ** (2.0 - s - s0)
            / (1.0 - s)
            * cmath.exp(log_gamma(s + s0 - 2.0) + log_gamma(1.0 - s0) - log_gamma(s - 1.0))
        )

    t = s.imag
    H = max(50.0, abs(t) + 40.0, settings.contour_half_height)
    # panels shrink geometrically toward the two sharp features: the
    # extracted pole just left of the contour and the Gamma spike at
    # y = -Im s, whose widths collapse near the region corners
    spikes = ((s0.imag, 1.5 - s0.real), (-t, s.real - 0.5))
    edges = [-H]
    y = -H
    while y < H:
        w = min(2.0, 10.0 / (1.0 + abs(log_x) + math.log(2.0 + abs(t + y))))
        for yc, d in spikes:
            w = min(w, max(0.55 * d, 0.4 * abs(y - yc)))
        y = min(y + w, H)
        edges.append(y)
    edges_arr = np.asarray(edges)

    lg_s1 = log_gamma(s - 1.0)

    def _integrand(ys):
        z = 0.5 + 1j * ys
        expo = _log_gamma_arr(s - 1.0 + z) + _log_gamma_arr(-z) - lg_s1 - z * log_x
        return np.exp(expo) / (s0 - 1.0 - z)

    x12, w12 = gl_nodes(12)
    x6, w6 = gl_nodes(6)
    mid = 0.5 * (edges_arr[1:] + edges_arr[:-1])
    half = 0.5 * (edges_arr[1:] - edges_arr[:-1])
    ys12 = (mid[:, None] + half[:, None] * x12[None, :]).ravel()
    ws12 = (half[:, None] * w12[None, :]).ravel()
    ys6 = (mid[:, None] + half[:, None] * x6[None, :]).ravel()
    ws6 = (half[:, None] * w6[None, :]).ravel()
    f12 = _integrand(ys12)
    f6 = _integrand(ys6)
    p12 = ws12 * f12
    p6 = ws6 * f6
    npan = len(mid)
    seg12 = np.add.reduceat(p12, np.arange(0, 12 * npan, 12))
    seg6 = np.add.reduceat(p6, np.arange(0, 6 * npan, 6))
    panel_err = float(np.sum(np.abs(seg12 - seg6)))
    trunc = float(abs(f12[0]) + abs(f12[-1]))
    contour_val = complex(np.sum(seg12))
    scale = abs(pref) / (2.0 * math.pi)
    r3 = pref * contour_val / (2.0 * math.pi)
    bound = scale * (panel_err + 2.0 * trunc + _EPS * float(np.sum(np.abs(p12))))
    return TailIntegralParts(
        residue_origin=r1,
        residue_shifted=r2,
        contour=r3,
        x=x,
        contour_bound=bound,
    )


def _f_deriv(a: complex, b: complex, x: float, y: float, n: int) -> complex:
    """d^n/dy^n of y^(-a) (y+x)^(-b) by the Leibniz rule."""
    total = 0.0 + 0.0j
    binom = 1.0
    poch_a = 1.0 + 0.0j  # (a)_i
    ly = math.log(y)
    lyx = math.log(y + x)
    for i in range(n + 1):
        poch_b = 1.0 + 0.0j  # (b)_{n-i}
        for k in range(n - i):
            poch_b *= b + k
        term = (
            binom
            * poch_a
            * poch_b
            * cmath.exp(-(a + i) * ly - (b + n - i) * lyx)
        )
        total += term
        binom = binom * (n - i) / (i + 1)
        poch_a *= a + i
    if n % 2:
        total = -total
    return total


def _tail_corrections_bounded(
    s0: complex, s: complex, x: float, settings: EvalSettings
) -> tuple[complex, float]:
    """Sawtooth correction integral plus the endpoint term.

    Together with tail_integral this completes the continued A2 piece:
    the smooth integral, a sawtooth-weighted correction over [1, inf),
    and the boundary value at y = 1.
    """
    # endpoint term
    y3 = (1.0 + x) ** (1.0 - s) / (2.0 * (1.0 - s))

    t0a = abs(s0.imag)
    ta = abs(s.imag)
    cut = max(
        64,
        int(math.ceil(0.55 * (abs(s0) + abs(s)))) + 20,
        int(math.ceil(1.05 * x)) + 16,
    )

    x12, w12 = gl_nodes(12)
    x6, w6 = gl_nodes(6)
    edges = []
    starts = []
    for k in range(1, cut):
        q = 1 + int((t0a / k + ta / (k + x)) / 3.0)
        q = min(q, 64)
        for i in range(q):
            edges.append((k + i / q, k + (i + 1) / q, float(k)))

    los = np.array([e[0] for e in edges])
    his = np.array([e[1] for e in edges])
    fls = np.array([e[2] for e in edges])

    def _flat(xn, wn):
        mid = 0.5 * (los + his)
        half = 0.5 * (his - los)
        ys = (mid[:, None] + half[:, None] * xn[None, :]).ravel()
        ws = (half[:, None] * wn[None, :]).ravel()
        fl = np.repeat(fls, len(xn))
        return ys, ws, fl

    def _kernel(ys):
        ly = np.log(ys)
        lyx = np.log(ys + x)
        return -s0 * np.exp(-(s0 + 1.0) * ly + (1.0 - s) * lyx) + (
            1.0 - s
        ) * np.exp(-s0 * ly - s * lyx)

    ys12, ws12, fl12 = _flat(x12, w12)
    ys6, ws6, fl6 = _flat(x6, w6)
    f12 = (ys12 - fl12 - 0.5) * _kernel(ys12)
    f6 = (ys6 - fl6 - 0.5) * _kernel(ys6)
    p12 = ws12 * f12
    p6 = ws6 * f6
    npan = len(edges)
    seg12 = np.add.reduceat(p12, np.arange(0, 12 * npan, 12))
    seg6 = np.add.reduceat(p6, np.arange(0, 6 * npan, 6))
    head = complex(np.sum(seg12))
    quad_err = float(np.sum(np.abs(seg12 - seg6)))
    round_err = _EPS * float(np.sum(np.abs(p12))) * math.log(2.0 + npan)

    # Bernoulli tail of the sawtooth integral from the integer cutoff
    tail = KahanSum()
    scale = 0.0
    prev = math.inf
    tail_rem = 0.0
    for j in range(1, 13):
        n = 2 * j - 2
        g = -s0 * _f_deriv(s0 + 1.0, s - 1.0, x, float(cut), n) + (
            1.0 - s
        ) * _f_deriv(s0, s, x, float(cut), n)
        term = -BERN_OVER_FACT[j - 1] * g
        mag = abs(term)
        scale = max(scale, mag)
        if mag >= prev and j > 2:
            tail_rem = 4.0 * mag
            break
        tail.add(term)
        prev = mag
        tail_rem = 4.0 * mag
        if mag < 1e-20 * max(scale, abs(head)):
            break

    inv = 1.0 / (1.0 - s)
    value = (head + tail.value) * inv + y3
    bound = (quad_err + round_err + tail_rem) * abs(inv)
    return value, bound


def tail_corrections(
    s0: complex,
    s: complex,
    x: float,
    settings: EvalSettings | None = None,
) -> complex:
    """Sawtooth and endpoint corrections completing the continued tail."""
    settings = _settings(settings)
    s0 = complex(s0)
    s = complex(s)
    x = float(x)
    if x < 1.0:
        raise DomainError("tail_corrections needs x >= 1")
    if not (s0.real > 0.0 and (s0 + s).real > 1.0):
        raise DomainError("tail_corrections needs Re s0 > 0 and Re(s0+s) > 1")
    if s == 1.0:
        raise PoleError("tail_corrections is undefined at s = 1")
    value, _ = _tail_corrections_bounded(s0, s, x, settings)
    return value


def zeta2_mb(
    s0: complex,
    s: complex,
    x: float | None = None,
    settings: EvalSettings | None = None,
) -> EvalResult:
    """Double zeta via the contour-continued tail, cutoff at x.

    Covers 0 < Re s0 < 3/2, Re s > 1/2, Re(s0+s) > 1 off the singular
    set; inside stronger regions it must agree with the other routes.
    """
    settings = _settings(settings)
    s0 = complex(s0)
    s = complex(s)
    if x is None:
        x = float(settings.n_cutoff)
    x = float(x)
    if x < 1.0:
        raise DomainError("zeta2_mb needs x >= 1")
    if singular_distance(s0, s) < settings.singular_radius:
        raise SingularError(
            f"(s0, s) = ({s0}, {s}) is within singular_radius of a singular point"
        )
    if not (0.0 < s0.real < 1.5 and s.real > 0.5 and (s0 + s).real > 1.0):
        raise DomainError(
            f"zeta2_mb needs 0 < Re s0 < 3/2, Re s > 1/2, Re(s0+s) > 1; got s0={s0}, s={s}"
        )
    A1, A3, A4, pm, M, bound, terms = _em_pieces(s0, s, x, settings)
    parts = tail_integral(s0, s, x, settings)
    corr, corr_err = _tail_corrections_bounded(s0, s, x, settings)
    A2 = parts.total + corr
    value = A1 - A2 - A3 - A4
    est = bound + parts.contour_bound + corr_err
    return EvalResult(value=value, est_error=est, route=ROUTE_MB, terms_used=terms + M)


# ---------------------------------------------------------------------------
# dispatch

def zeta2_eval(
    s0: complex,
    s: complex,
    settings: EvalSettings | None = None,
) -> EvalResult:
    """Evaluate the double zeta function on the strongest applicable route."""
    settings = _settings(settings)
    s0 = complex(s0)
    s = complex(s)
    region = classify_region(s0, s, settings)
    if region is RegionClass.SINGULAR:
        w = s0 + s
        if abs(s - 1.0) <= abs(w - min(2, int(round(w.real)))):
            raise SingularError(f"pole at s = 1 (s = {s})")
        raise SingularError(
            f"singular locus s0+s = {min(2, int(round(w.real)))} (s0+s = {w})"
        )
    if region is RegionClass.ABSOLUTELY_CONVERGENT:
        return zeta2_direct(s0, s, settings)
    if region is RegionClass.EM_STRIP:
        return zeta2_em(s0, s, settings.n_cutoff, settings)
    if region is RegionClass.MB_STRIP:
        return zeta2_mb(s0, s, float(settings.n_cutoff), settings)
    raise DomainError(
        f"(s0, s) = ({s0}, {s}) is outside every implemented region"
    )


def residue_at_s1(s0: complex, settings: EvalSettings | None = None) -> complex:
    """Residue of s -> zeta2(s0, s) at s = 1 by Richardson extrapolation.

    Needs Re s0 > 1 so the approach stays inside absolute convergence.
    The limit must reproduce zeta(s0); callers can cross-check.
    """
    settings = _settings(settings)
    s0 = complex(s0)
    if s0.real <= 1.0:
        raise DomainError("residue_at_s1 needs Re s0 > 1")
    deltas = [1e-1, 1e-2, 1e-3, 1e-4]
    vals = [
        delta * zeta2_direct(s0, 1.0 + delta, settings).value for delta in deltas
    ]
    # Neville tableau toward delta = 0
    n = len(deltas)
    tab = list(vals)
    prev_top = tab[0]
    for level in range(1, n):
        new = []
        for i in range(n - level):
            d_i, d_j = deltas[i], deltas[i + level]
            new.append((d_i * tab[i + 1] - d_j * tab[i]) / (d_i - d_j))
        prev_top = tab[0]
        tab = new
    limit = tab[0]
    if not cmath.isfinite(limit):
        raise ConvergenceError("extrapolation produced a non-finite value")
    if abs(limit - prev_top) > 1e-4 * max(1.0, abs(limit)):
        raise ConvergenceError("residue extrapolation did not settle")
    return limit
