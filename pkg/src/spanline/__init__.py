"""Exact computations for spaces of spanning line configurations and their cohomology presentations."""

from .exact_poly import GRLEX, LEX, Polynomial, TermOrder, VarUniverse
from .groebner import GroebnerBasis, buchberger

__all__ = ["GRLEX", "LEX", "Polynomial", "TermOrder", "VarUniverse", "GroebnerBasis", "buchberger"]
__version__ = "0.1.0"
