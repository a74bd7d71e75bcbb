"""Exact symmetry groups and similarities of implicit plane algebraic curves."""

from .bipoly import BiPoly, MapKind, PlaneMap, ZPoly, compose, from_complex, laplacian, squarefree_part, to_complex
from .conic import classify, conic_symmetries, conics_similar
from .errors import (
    DomainError,
    InternalAssertionError,
    InvalidInputError,
    ParseError,
    PreconditionError,
    SymmetraError,
)
from .harmonic import associated_g, axis_candidates, harmonic_from_g, primitive_G, rotation_center
from .numeric import CPoly, GaussRat
from .parse import parse_poly
from .reduce import chain, reduce_to_harmonic
from .render import render_svg
from .report import emit_report
from .reports import SimilarityReport, SimilarityStatus, SymmetryReport
from .similarity import harmonic_candidates, lambda_chain, similarities, verify_similarity
from .symmetry import reflection_units, rotation_orders, symmetries, verify_isometry

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "CPoly",
    "DomainError",
    "GaussRat",
    "InternalAssertionError",
    "InvalidInputError",
    "MapKind",
    "ParseError",
    "PlaneMap",
    "PreconditionError",
    "SimilarityReport",
    "SimilarityStatus",
    "SymmetraError",
    "SymmetryReport",
    "ZPoly",
    "associated_g",
    "axis_candidates",
    "chain",
    "classify",
    "compose",
    "conic_symmetries",
    "conics_similar",
    "emit_report",
    "from_complex",
    "harmonic_candidates",
    "harmonic_from_g",
    "lambda_chain",
    "laplacian",
    "parse_poly",
    "primitive_G",
    "reduce_to_harmonic",
    "reflection_units",
    "render_svg",
    "rotation_center",
    "rotation_orders",
    "similarities",
    "squarefree_part",
    "symmetries",
    "to_complex",
    "verify_isometry",
    "verify_similarity",
]
