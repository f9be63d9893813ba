"""Hopf algebras of planar decorated rooted trees: coproducts, antipodes, the Hopf
pairing and its dual basis, the primitive Lie algebra, the left-admissible coproduct,
the formal-diffeomorphism subalgebra, the tensor coalgebra, the unordered quotient
and their generating series."""

from .algebra import Element, Tensor
from .forest import ParseError, ResourceCapError, Tree, parse_forest, render_forest

__all__ = ["Element", "ParseError", "ResourceCapError", "Tensor", "Tree", "parse_forest", "render_forest"]
__version__ = "0.1.0"
