"""High-precision spectral zeta functions and zeta-regularized determinants.

Families: round spheres, hemispheres with Dirichlet conditions, real
projective spaces and the quantum harmonic oscillator.
"""

from __future__ import annotations

from .determinants import (
    DetResult,
    Method,
    det_closed_form,
    det_lowdim_constant,
    det_table,
    det_voros,
    direct_series_zeta,
)
from .errors import ConvergenceTooSlow, OutOfRange, PoleError, ShiftTooLarge, SpecDetError, UnsupportedDimension
from .expansion import ExpTerm, Kind, Manifold, ZetaExpansion, ZetaTerm, explicit_build, recursive_build
from .numeric import BigReal

__all__ = [
    "BigReal",
    "ConvergenceTooSlow",
    "DetResult",
    "ExpTerm",
    "Kind",
    "Manifold",
    "Method",
    "OutOfRange",
    "PoleError",
    "ShiftTooLarge",
    "SpecDetError",
    "UnsupportedDimension",
    "ZetaExpansion",
    "ZetaTerm",
    "det_closed_form",
    "det_lowdim_constant",
    "det_table",
    "det_voros",
    "direct_series_zeta",
    "explicit_build",
    "recursive_build",
]

__version__ = "0.1.0"
