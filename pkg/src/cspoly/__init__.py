"""Centrally symmetric simplicial spheres: face numbers, stacking and rigidity."""

from .complex import ComplexError, SimplicialComplex, from_facets, link, star
from .constructions import StackingScript, StackingStep, cross_polytope_boundary, simplex_boundary
from .enumerative import f_vector, g_number, h_polynomial, h_vector
from .symmetry import CsComplex, CsValidationError, Involution, validate_cs

__all__ = [
    "ComplexError",
    "CsComplex",
    "CsValidationError",
    "Involution",
    "SimplicialComplex",
    "StackingScript",
    "StackingStep",
    "cross_polytope_boundary",
    "f_vector",
    "from_facets",
    "g_number",
    "h_polynomial",
    "h_vector",
    "link",
    "simplex_boundary",
    "star",
    "validate_cs",
]
