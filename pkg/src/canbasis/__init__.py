"""Canonical bases of U_v^+ for the equioriented A_n quiver, and simple-module
dimensions for the affine Hecke algebra of GL_n, in exact arithmetic."""
from __future__ import annotations

from .decomp import TriangularSystem, canonical_basis, ldlt, pipeline_order, qp_split, solve_psi
from .errors import NotLaurentError, ResourceLimitError, ZeroDivisionInQv, ZeroPivotError
from .flags import WeylElement, ZeroPattern, orbit_dim, shape_pattern
from .hecke import HeckeResult, hecke_dimensions
from .laurent import BarSplit, IntLaurent, RatFunc, bar_split, quantum_factorial, v
from .pairing import PairingContext, psi_entry, psi_matrix
from .typea import KostantPartition, MonomialShape, enumerate_kp, positive_roots_ordered, reineke_exponents

__version__ = "0.1.0"

__all__ = [
    "BarSplit",
    "HeckeResult",
    "IntLaurent",
    "KostantPartition",
    "MonomialShape",
    "NotLaurentError",
    "PairingContext",
    "RatFunc",
    "ResourceLimitError",
    "TriangularSystem",
    "WeylElement",
    "ZeroDivisionInQv",
    "ZeroPattern",
    "ZeroPivotError",
    "bar_split",
    "canonical_basis",
    "enumerate_kp",
    "hecke_dimensions",
    "ldlt",
    "orbit_dim",
    "pipeline_order",
    "positive_roots_ordered",
    "psi_entry",
    "psi_matrix",
    "qp_split",
    "quantum_factorial",
    "reineke_exponents",
    "shape_pattern",
    "solve_psi",
    "v",
]
