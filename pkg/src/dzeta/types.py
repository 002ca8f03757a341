"""Shared value types: evaluation settings, results, and region tags.

Complex scalars are plain Python ``complex`` (or numpy complex128)
throughout; there is no wrapper type.  Every public evaluation returns an
:class:`EvalResult` whose ``est_error`` is a sum of certified pieces
(truncation bounds, asymptotic remainder bounds, contour tails), never a
guess.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

# Route tags recorded in EvalResult.route.
ROUTE_DIRECT = "Direct"
ROUTE_EM = "EulerMaclaurin"
ROUTE_MB = "MellinBarnes"


class RegionClass(enum.Enum):
    """Where an argument pair (s0, s) sits relative to the convergence regions.

    ABSOLUTELY_CONVERGENT  Re s > 1 and Re(s0+s) > 2.
    EM_STRIP               Re s > 0, Re(s0+s) > 2, s != 1 (smoothed-cutoff
                           continuation applies).
    MB_STRIP               0 < Re s0 < 3/2, Re s > 1/2, Re(s0+s) > 1, s != 1,
                           and s0+s off the singular point list (contour
                           continuation applies).
    SINGULAR               within the exclusion radius of s = 1 or of
                           s0+s in {2, 1, 0, -1, -2, ...}.
    OUT_OF_DOMAIN          none of the above.
    """

    ABSOLUTELY_CONVERGENT = "AbsolutelyConvergent"
    EM_STRIP = "EMStrip"
    MB_STRIP = "MBStrip"
    SINGULAR = "Singular"
    OUT_OF_DOMAIN = "OutOfDomain"


@dataclass(frozen=True)
class EvalSettings:
    """Truncation cutoffs, contour height, tolerance, and exclusion radius.

    The cutoffs are hard caps: evaluators pick their own working lengths
    from the arguments and the tolerance, and raise ConvergenceError if the
    certified bound cannot be pushed below ``tol`` within the caps.
    """

    m_cutoff: int = 200_000          # cap on outer-index (m) summation length
    n_cutoff: int = 16               # inner offset count for the smoothed-cutoff route
    k_cutoff: int = 200_000          # cap on collapsed single-index (k) summation length
    contour_half_height: float = 50.0  # minimum half-height of the vertical contour
    tol: float = 1e-10               # target absolute error per evaluation
    singular_radius: float = 1e-6    # exclusion radius around the singular locus

    def __post_init__(self) -> None:
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.singular_radius <= 0:
            raise ValueError("singular_radius must be positive")
        if self.contour_half_height <= 0:
            raise ValueError("contour_half_height must be positive")
        for name in ("m_cutoff", "n_cutoff", "k_cutoff"):
            if getattr(self, name) < 2:
                raise ValueError(f"{name} must be >= 2")


@dataclass(frozen=True)
class EvalResult:
    """Value plus certified error bound and the continuation route that fired."""

    value: complex
    est_error: float
    route: str           # one of ROUTE_DIRECT / ROUTE_EM / ROUTE_MB
    terms_used: int

    def __post_init__(self) -> None:
        if self.est_error < 0:
            raise ValueError("est_error must be >= 0")
