"""Exact computations in the super Jordan plane and its finite-dimensional modules."""

from .algebra import PBWElement, JordanElement, PBWMonomial, JordanMonomial, reduce_word, normal_mul, jordan_mul
from .classify import Decomposable, Label, classify, construct, iso_criterion
from .errors import (
    ClosureViolated,
    ConstraintViolation,
    DimensionUnsupported,
    NonsplitSpectrum,
    ParseError,
    RelationViolated,
    ShapeError,
    SuperJordanError,
)
from .exactmath import Mat, Poly
from .modtheory import Representation, full_decompose, hom_space, is_indecomposable, is_isomorphic

__version__ = "0.1.0"

__all__ = [
    "PBWElement", "JordanElement", "PBWMonomial", "JordanMonomial", "reduce_word", "normal_mul", "jordan_mul",
    "Decomposable", "Label", "classify", "construct", "iso_criterion",
    "SuperJordanError", "ShapeError", "NonsplitSpectrum", "RelationViolated", "DimensionUnsupported",
    "ConstraintViolation", "ClosureViolated", "ParseError",
    "Mat", "Poly",
    "Representation", "full_decompose", "hom_space", "is_indecomposable", "is_isomorphic",
]
