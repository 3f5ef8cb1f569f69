"""Exact PBW rewriting for the two-parameter algebras U+_{r,s}(sl3) and U+_{r,s}(B2)."""

__version__ = "0.1.0"

from .algebra import (FreeElement, PBWElement, Presentation, confluence_check, multiply,
                      normal_form, weight_of, weight_space_basis)
from .coeff import LaurentCoeff, laurent_arith, monomial_invert, nullspace
from .parser import ParseError, UnknownSymbol, parse
from .presentations import build_presentation, derived_element, serre_check, skew_tower_check

__all__ = [
    "FreeElement", "LaurentCoeff", "PBWElement", "ParseError", "Presentation", "UnknownSymbol",
    "build_presentation", "confluence_check", "derived_element", "laurent_arith",
    "monomial_invert", "multiply", "normal_form", "nullspace", "parse", "serre_check",
    "skew_tower_check", "weight_of", "weight_space_basis",
]
