"""Exact verification kernel for finite-rank bialgebroids.

Everything is computed with exact scalars (rationals, prime fields, or
truncated h-polynomial rings) on explicit bases; all axioms, identities and
isomorphisms are checked elementwise with zero tolerance.
"""

from .scalars import QQ, PrimeField, HPolyRing, ScalarError
from .algebra import StructureAlgebra
from .bialgebroid import (LeftBialgebroid, RightBialgebroid,
                          check_left_bialgebroid, check_right_bialgebroid)
from .reports import Report
from .tensor import ABimodule, ShapeError, tensor_over_A, takeuchi_subspace

__all__ = [
    "QQ", "PrimeField", "HPolyRing", "ScalarError", "StructureAlgebra",
    "LeftBialgebroid", "RightBialgebroid", "check_left_bialgebroid",
    "check_right_bialgebroid", "Report", "ABimodule", "ShapeError",
    "tensor_over_A", "takeuchi_subspace",
]
