"""Exact computation of PBW, crystal, and canonical bases for the quantized
enveloping superalgebras attached to the Cartan data of gl(m|1), and of their
highest-weight modules."""

from .scalars import LaurentPoly, RatFunc, q_integer, q_factorial, q_binomial, ring_membership

__all__ = [
    "LaurentPoly", "RatFunc", "q_integer", "q_factorial", "q_binomial", "ring_membership",
]
