"""Exact arithmetic substrate: rationals, integer polynomials, Sturm chains,
multivariate polynomials over Q.

Rationals are ``fractions.Fraction`` (aliased ``Rat``): arbitrary precision,
always reduced, positive denominator — exactly the invariants the rest of
the engine relies on.
"""

from fractions import Fraction as Rat

from .intpoly import (
    IntPoly,
    ext_gcd,
    poly_gcd,
    rational_roots,
    square_free_part,
)
from .mpoly import MPoly, SYMBOLS
from .sturm import (
    BACKEND,
    SturmChain,
    count_real_roots,
    exists_root_in_open,
    isolate_smallest_positive_root,
    smallest_positive_rational_root,
)

__all__ = [
    "Rat",
    "IntPoly",
    "MPoly",
    "SYMBOLS",
    "ext_gcd",
    "poly_gcd",
    "rational_roots",
    "square_free_part",
    "BACKEND",
    "SturmChain",
    "count_real_roots",
    "exists_root_in_open",
    "isolate_smallest_positive_root",
    "smallest_positive_rational_root",
]
