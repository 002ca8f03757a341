"""Gauss-Legendre panel quadrature with an embedded error estimate.

Nodes and weights come from numpy's Legendre module and are cached per
order.  A panel integral is always computed twice, once at the working
order and once at roughly half of it; the difference is the panel error
estimate.  Deterministic by construction: panel order, node order and
the final left-to-right reduction are all fixed.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def gl_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1], order n."""
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def panel_points(a: float, b: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Mapped nodes and weights for one panel [a, b]."""
    x, w = gl_nodes(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return mid + half * x, half * w


def integrate_panels(
    f,
    edges: np.ndarray,
    n: int = 24,
    n_low: int | None = None,
) -> tuple[complex, float]:
    """Integrate vectorized f over consecutive panels given by edges.

    Returns (integral, error_estimate) where the estimate is the summed
    per-panel |high - low| order difference.
    """
    if n_low is None:
        n_low = max(2, n // 2)
    total = 0.0 + 0.0j
    err = 0.0
    for i in range(len(edges) - 1):
        a, b = float(edges[i]), float(edges[i + 1])
        if b <= a:
            continue
        xs, ws = panel_points(a, b, n)
        hi = complex(np.sum(ws * f(xs)))
        xs2, ws2 = panel_points(a, b, n_low)
        lo = complex(np.sum(ws2 * f(xs2)))
        total += hi
        err += abs(hi - lo)
    return total, err
