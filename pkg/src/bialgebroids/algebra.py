"""Finite-rank associative unital algebras given by structure constants."""

from __future__ import annotations

from .linalg import unit_vector, zeros
from .tensor import ShapeError


class StructureAlgebra:
    """An algebra over an exact scalar ring, presented on a fixed basis.

    ``mul[i][j]`` is the coordinate vector of (basis_i * basis_j); ``unit`` is
    the coordinate vector of 1.  Values are immutable after construction.
    """

    def __init__(self, ring, mul, unit, names=None, validate=True):
        dim = len(mul)
        if dim == 0:
            raise ShapeError("algebras must have positive dimension")
        if any(len(row) != dim for row in mul) or any(
                len(v) != dim for row in mul for v in row):
            raise ShapeError("structure tensor of wrong shape")
        if len(unit) != dim:
            raise ShapeError("unit vector of wrong length")
        self.ring = ring
        self.dim = dim
        self.mul = mul
        self.unit = list(unit)
        self.names = list(names) if names else [f"e{i}" for i in range(dim)]
        if validate:
            bad = self.associativity_failures()
            if bad:
                i, j, k = bad[0]
                raise ShapeError(f"algebra is not associative at basis triple ({i},{j},{k})")
            bad = self.unit_failures()
            if bad:
                raise ShapeError(f"unit fails at basis {bad[0]}")

    def multiply(self, x, y):
        ring = self.ring
        out = [ring.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.mul[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                c = a * b
                for k, m in enumerate(row[j]):
                    if m:
                        out[k] = out[k] + c * m
        return out

    def left_mult_matrix(self, x):
        """Columns of the operator y -> x*y."""
        return [self.multiply(x, unit_vector(self.ring, self.dim, j))
                for j in range(self.dim)]

    def right_mult_matrix(self, x):
        """Columns of the operator y -> y*x."""
        return [self.multiply(unit_vector(self.ring, self.dim, j), x)
                for j in range(self.dim)]

    def associativity_failures(self):
        bad = []
        n = self.dim
        e = [unit_vector(self.ring, n, i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                ij = self.mul[i][j]
                for k in range(n):
                    lhs = self.multiply(ij, e[k])
                    rhs = self.multiply(e[i], self.mul[j][k])
                    if lhs != rhs:
                        bad.append((i, j, k))
        return bad

    def unit_failures(self):
        bad = []
        for i in range(self.dim):
            ei = unit_vector(self.ring, self.dim, i)
            if self.multiply(self.unit, ei) != ei or self.multiply(ei, self.unit) != ei:
                bad.append(i)
        return bad

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i):
                if self.mul[i][j] != self.mul[j][i]:
                    return False
        return True

    def opposite(self):
        mul = [[self.mul[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return StructureAlgebra(self.ring, mul, self.unit, names=self.names,
                                validate=False)

    def map_scalars(self, new_ring, f):
        mul = [[[f(c) for c in v] for v in row] for row in self.mul]
        unit = [f(c) for c in self.unit]
        return StructureAlgebra(new_ring, mul, unit, names=self.names, validate=False)

    def __repr__(self):
        return f"StructureAlgebra(dim={self.dim}, ring={self.ring!r})"


def algebra_hom_failures(A: StructureAlgebra, B: StructureAlgebra, mat_cols,
                         anti=False):
    """Basis pairs where a linear map A->B fails to be a (anti)morphism."""
    from .tensor import apply_mat_cols
    ring = A.ring
    bad = []
    img = [apply_mat_cols(ring, mat_cols, unit_vector(ring, A.dim, i))
           for i in range(A.dim)]
    unit_img = apply_mat_cols(ring, mat_cols, A.unit)
    if unit_img != B.unit:
        bad.append(("unit",))
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = apply_mat_cols(ring, mat_cols, A.mul[i][j])
            rhs = (B.multiply(img[j], img[i]) if anti
                   else B.multiply(img[i], img[j]))
            if lhs != rhs:
                bad.append((i, j))
    return bad
