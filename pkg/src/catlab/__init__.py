"""Finite-ring models of quadratic cat-groups and their Galois-algebra realizations."""

from .ring import FiniteRing, make_poly_quotient, make_product, make_zmod
from .qu import PairPQ

__all__ = ["FiniteRing", "PairPQ", "make_poly_quotient", "make_product", "make_zmod"]
