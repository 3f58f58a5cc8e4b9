"""Exact combinatorics of multi-fans of torus manifolds."""

from .exactmath import determinant, primitive, solve_nonneg, unimodular_extension
from .multifan import (
    ClassificationReport,
    MultiFan,
    classify,
    cone_contains,
    is_complete,
    is_generic,
    is_nonsingular,
    is_ordinary_fan,
    restrict,
    sample_generic,
    stellar_subdivide,
    todd_genus,
    todd_v_independence,
    validate,
)
from .simplicial import SimplicialComplex, homology, is_homology_sphere, link

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport", "MultiFan", "SimplicialComplex", "classify", "cone_contains",
    "determinant", "homology", "is_complete", "is_generic", "is_homology_sphere",
    "is_nonsingular", "is_ordinary_fan", "link", "primitive", "restrict", "sample_generic",
    "solve_nonneg", "stellar_subdivide", "todd_genus", "todd_v_independence",
    "unimodular_extension", "validate",
]
