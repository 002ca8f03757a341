"""Internal series engine: compensated sums and certified tail sums.

Everything here reduces power-sum tails to one primitive,

    hurwitz_tail(a, A, p) = sum_{n>=0} log(A+n)^p * (A+n)^(-a),

evaluated by summing directly until the index is comparable to |a| and
then switching to the asymptotic expansion

    B^(1-a)/(a-1) + B^(-a)/2 + sum_j B_{2j}/(2j)! * (a)_{2j-1} * B^(1-a-2j)

(differentiated termwise in a for the log-weighted cases p = 1, 2).  The
expansion is asymptotic, not convergent: terms are accumulated while they
shrink and the first omitted term, inflated by |a+2J+1| / (Re a + 2J+1),
is returned as a certified remainder bound.  Every caller is expected to
add that bound into its own error budget.

The binomial variant shifted_tail() handles sums of the shape
sum m^(-alpha) (m+x)^(-beta) by expanding (1+x/m)^(-beta); it needs the
start index to exceed x and reports a geometric bound for the dropped
binomial tail.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

_JMAX = 28          # asymptotic terms kept at most (B_2 .. B_56 available)
_EPS_STOP = 1e-18   # relative size at which term accumulation stops


def _bernoulli_even(count: int) -> list[Fraction]:
    """B_2, B_4, ..., B_{2*count} by the defining recurrence, exact."""
    n_max = 2 * count
    b: list[Fraction] = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * b[k]
            binom = binom * (m + 1 - k) // (k + 1)
        b.append(-acc / (m + 1))
    return [b[2 * j] for j in range(1, count + 1)]


_BERN_EVEN = _bernoulli_even(_JMAX)

# d_j = B_{2j} / (2j)!  for j = 1.._JMAX, as floats
BERN_OVER_FACT = tuple(
    float(_BERN_EVEN[j - 1] / math.factorial(2 * j)) for j in range(1, _JMAX + 1)
)

# ratio d_j / d_{j-1}, used for incremental term updates (d_0 := 1 is unused)
_D_RATIO = tuple(
    BERN_OVER_FACT[j] / BERN_OVER_FACT[j - 1] for j in range(1, _JMAX)
)


class KahanSum:
    """Compensated running sum; works for float or complex addends."""

    __slots__ = ("_s", "_c")

    def __init__(self, start=0.0):
        self._s = start
        self._c = 0.0 * start

    def add(self, x) -> None:
        y = x - self._c
        t = self._s + y
        self._c = (t - self._s) - y
        self._s = t

    @property
    def value(self):
        return self._s


def pow_range(s: complex, lo: int, hi: int) -> np.ndarray:
    """Array [lo^-s, ..., hi^-s] (inclusive), computed as exp(-s log n)."""
    n = np.arange(lo, hi + 1, dtype=np.float64)
    return np.exp(-s * np.log(n))


def hurwitz_tail(a: complex, A: float, p: int = 0) -> tuple[complex, float]:
    """(sum_{n>=0} log(A+n)^p (A+n)^(-a), certified bound on its error).

    Real A > 0; p in {0, 1, 2}.  Converges as a series for Re a > 1; for
    0 < Re a <= 1 (p = 0) the asymptotic formula still evaluates the
    analytic continuation, which is how the zeta evaluator reaches the
    critical strip.  The only excluded point is a = 1 (genuine pole).
    """
    if p not in (0, 1, 2):
        raise ValueError("p must be 0, 1 or 2")
    if A <= 0:
        raise ValueError("A must be positive")
    a = complex(a)
    if a == 1.0:
        raise ZeroDivisionError("hurwitz_tail pole at a = 1")

    # Direct summation until the index dominates |a| enough for the
    # asymptotic series to converge fast (ratio ~ (|a|/(2 pi B))^2).
    A_big = max(64.0, 0.52 * abs(a))
    head = 0.0 + 0.0j
    K = 0
    if A < A_big:
        K = int(math.ceil(A_big - A))
        n = A + np.arange(K, dtype=np.float64)
        ln = np.log(n)
        terms = np.exp(-a * ln)
        if p == 1:
            terms = terms * ln
        elif p == 2:
            terms = terms * ln * ln
        head = complex(np.sum(terms))
    B = A + K

    L = math.log(B)
    pow1 = B ** (1.0 - a.real) * complex(math.cos(-a.imag * L), math.sin(-a.imag * L))
    # pow1 = B^(1-a); build B^(-a) from it
    pow0 = pow1 / B
    inv = 1.0 / (a - 1.0)
    if p == 0:
        acc = pow1 * inv + 0.5 * pow0
    elif p == 1:
        acc = pow1 * (L * inv + inv * inv) + 0.5 * L * pow0
    else:
        acc = pow1 * (L * L * inv + 2.0 * L * inv * inv + 2.0 * inv**3) + 0.5 * L * L * pow0

    # Asymptotic correction terms, built incrementally to avoid overflow:
    #   c_j = d_j * (a)_{2j-1},  P_j = B^(1-a-2j)
    # h_j, g_j are the first and second log-derivative sums of (a)_{2j-1}.
    invB2 = 1.0 / (B * B)
    c_times_P = BERN_OVER_FACT[0] * a * pow0 / B  # j = 1 term: d_1 * a * B^(-a-1)
    h = 1.0 / a
    g = 1.0 / (a * a)
    scale = abs(acc) + 1e-300
    prev_mag = math.inf
    bound = 0.0
    for j in range(1, _JMAX + 1):
        if j > 1:
            w1 = a + (2 * j - 3)
            w2 = a + (2 * j - 2)
            c_times_P = c_times_P * _D_RATIO[j - 2] * w1 * w2 * invB2
            h = h + 1.0 / w1 + 1.0 / w2
            g = g + 1.0 / (w1 * w1) + 1.0 / (w2 * w2)
        if p == 0:
            term = c_times_P
        elif p == 1:
            term = c_times_P * (L - h)
        else:
            term = c_times_P * ((L - h) ** 2 - g)
        mag = abs(term)
        if mag >= prev_mag:
            # series started diverging: certify by the smallest term seen
            bound = prev_mag * _bound_factor(a, j)
            break
        acc += term
        scale = max(scale, abs(acc))
        if mag <= _EPS_STOP * scale:
            bound = mag * _bound_factor(a, j)
            break
        prev_mag = mag
        bound = mag * _bound_factor(a, j)  # fallback if loop exhausts
    return head + acc, bound


def _bound_factor(a: complex, j: int) -> float:
    den = a.real + 2 * j + 1
    if den <= 0:
        return 10.0  # outside the classical bound's range; be loud, not wrong
    return max(1.0, abs(a + 2 * j + 1) / den)


def shifted_tail(
    alpha: complex, beta: complex, x: float, M: int, jmax: int = 60
) -> tuple[complex, float]:
    """(sum_{m>M} m^(-alpha) (m+x)^(-beta), certified bound).

    Requires M + 1 > x.  Two equivalent binomial expansions exist: in
    x/m with coefficients (beta)_j, or in x/(m+x) with (alpha)_j.  The
    effective expansion parameter carries the coefficient modulus, so
    the side with the smaller exponent is chosen; expanding against an
    exponent of large modulus marches through a growing hump and loses
    the cancelled digits.
    """
    if M + 1 <= x:
        raise ValueError("shifted_tail needs M + 1 > x")
    alpha = complex(alpha)
    beta = complex(beta)
    A_std = float(M + 1)
    if x == 0.0:
        return hurwitz_tail(alpha + beta, A_std)
    A_swp = A_std + x
    if (x / A_swp) * max(1.0, abs(alpha)) < (x / A_std) * max(1.0, abs(beta)):
        gen, sign, A = alpha, 1.0, A_swp
    else:
        gen, sign, A = beta, -1.0, A_std
    coef = 1.0 + 0.0j  # (sign)^j (gen)_j / j! * x^j, incrementally
    total = 0.0 + 0.0j
    bound_acc = 0.0
    term_mag = math.inf
    for j in range(jmax + 1):
        if j > 0:
            coef = coef * (sign * (gen + (j - 1)) * x / j)
        zh, zh_bound = hurwitz_tail(alpha + beta + j, A)
        term = coef * zh
        total += term
        bound_acc += abs(coef) * zh_bound
        term_mag = abs(term)
        if term_mag <= _EPS_STOP * (abs(total) + 1e-300) and j >= 2:
            break
    # geometric bound for the dropped binomial part
    r = (x / A) * max(1.0, (abs(gen) + j) / (j + 1))
    if r < 1.0:
        bound_acc += term_mag * r / (1.0 - r)
    else:
        bound_acc += math.inf
    return total, bound_acc
