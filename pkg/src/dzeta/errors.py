"""Exception types shared across the package.

Every public operation raises one of these instead of returning NaN/inf,
so callers (and the CLI exit-code mapping) can tell *why* a request was
refused: outside a convergence region, on a pole, too close to a singular
point, or simply not reachable at the configured cutoffs.
"""


class DZetaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DZetaError):
    """Arguments lie outside the region where the requested series/formula is valid."""


class PoleError(DZetaError):
    """Argument sits exactly on a pole of the requested function."""


class SingularError(DZetaError):
    """Argument pair is within the exclusion radius of the singular locus."""


class SingularPathError(DZetaError):
    """An integration segment would cross (or run along) the singular locus."""


class ConvergenceError(DZetaError):
    """The requested tolerance is not certifiable at the configured cutoffs."""


class InsufficientDataError(DZetaError):
    """Not enough points (or spread) to perform the requested fit."""
