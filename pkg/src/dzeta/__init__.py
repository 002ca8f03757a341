"""Numerical Euler double zeta-function: evaluation, continuation, experiments."""

from .types import EvalResult, EvalSettings, RegionClass

__all__ = ["EvalResult", "EvalSettings", "RegionClass"]
__version__ = "0.1.0"
