"""Parameterized Picard-Vessiot groups for second order equations over Q(t)(x)."""
from .field import RatT, PolyX, RatX
from .ore import OpT, OpX, apply_t, mul_t, right_divide_t, apply_x
from .telescope import primitive_of_rational, primitive_of_exponential
from .intersect import intersect
from .ratsol import rational_solutions

__all__ = ["RatT", "PolyX", "RatX", "OpT", "OpX", "apply_t", "mul_t",
           "right_divide_t", "apply_x", "primitive_of_rational",
           "primitive_of_exponential", "intersect", "rational_solutions"]
