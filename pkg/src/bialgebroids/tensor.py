"""Quotient tensor products over a base algebra and their Takeuchi subspaces.

A tensor product over A is modelled as a quotient of the plain tensor product
of coordinate spaces by the span of balancing relations ``R_a(x) (x) y -
x (x) L_a(y)`` for a running over a basis of A.  The quotient keeps an
echelonized relation span, a deterministic complement basis (non-pivot
coordinates, leftmost pivot first) and exact projection/section data.

Multi-leg variants quotient an n-fold tensor by links between arbitrary pairs
of legs, which is what the iterated coproduct and translation-map identities
live in.
"""

from __future__ import annotations

from .linalg import Echelon, kernel, to_dense, to_sparse, unit_vector
from .scalars import ScalarError


class ShapeError(ValueError):
    pass


class ABimodule:
    """A coordinate space with labelled A-action families.

    Each action is a list of matrices (as column lists), one matrix per basis
    element of A; the labels follow the four-action convention of the owning
    bialgebroid (left/right multiplication through source or target).
    """

    def __init__(self, ring, dim, actions=None, base_dim=None):
        if dim <= 0:
            raise ShapeError("modules must have positive rank")
        self.ring = ring
        self.dim = dim
        self.base_dim = base_dim
        self.actions = {}
        for label, mats in (actions or {}).items():
            self.add_action(label, mats)

    def add_action(self, label, mats):
        if self.base_dim is not None and len(mats) != self.base_dim:
            raise ShapeError(f"action {label!r}: expected {self.base_dim} matrices")
        for m in mats:
            if len(m) != self.dim or any(len(col) != self.dim for col in m):
                raise ShapeError(f"action {label!r}: matrix of wrong shape")
        self.actions[label] = mats

    def action(self, label):
        if label not in self.actions:
            raise ShapeError(f"module does not carry the {label!r} action")
        return self.actions[label]

    def check_commuting(self, left_label, right_label):
        """Verify a left/right action pair commutes elementwise on A-basis pairs."""
        from .linalg import mat_mul
        L = self.action(left_label)
        R = self.action(right_label)
        bad = []
        for i, Lm in enumerate(L):
            for j, Rm in enumerate(R):
                lr = mat_mul(self.ring, _cols_to_rows(Lm), _cols_to_rows(Rm))
                rl = mat_mul(self.ring, _cols_to_rows(Rm), _cols_to_rows(Lm))
                if lr != rl:
                    bad.append((i, j))
        return bad


def _cols_to_rows(cols):
    n = len(cols)
    m = len(cols[0]) if cols else 0
    return [[cols[j][i] for j in range(n)] for i in range(m)]


def apply_mat_cols(ring, cols, v):
    out = [ring.zero] * (len(cols[0]) if cols else 0)
    for j, c in enumerate(v):
        if c:
            col = cols[j]
            for i, x in enumerate(col):
                if x:
                    out[i] = out[i] + c * x
    return out


class QuotientSpace:
    """Ambient coordinate space modulo an echelonized relation span."""

    def __init__(self, ring, ambient_dim, relations):
        self.ring = ring
        self.ambient_dim = ambient_dim
        self.ech = Echelon(ring, ambient_dim)
        for r in relations:
            self.ech.add(r if isinstance(r, dict) else to_sparse(r))
        self.free = self.ech.free_columns()
        self.dim = len(self.free)
        self._free_index = {c: i for i, c in enumerate(self.free)}

    def project(self, vec):
        """Coordinates of the class of an ambient vector in the chosen basis."""
        v = self.ech.reduce(to_sparse(vec) if isinstance(vec, list) else vec)
        out = [self.ring.zero] * self.dim
        for c, x in v.items():
            out[self._free_index[c]] = x
        return out

    def section(self, qvec):
        """Canonical ambient representative of a quotient vector."""
        v = [self.ring.zero] * self.ambient_dim
        for i, x in enumerate(qvec):
            if x:
                v[self.free[i]] = x
        return v

    def section_basis(self):
        return [unit_vector(self.ring, self.ambient_dim, c) for c in self.free]

    def induced_map(self, mat_cols):
        """Push an ambient endomorphism that preserves relations down to the quotient.

        Returns the quotient matrix as columns; correctness of the push-down is
        the caller's obligation (it holds for all balancing actions used here).
        """
        cols = []
        for i in range(self.dim):
            amb = unit_vector(self.ring, self.ambient_dim, self.free[i])
            img = apply_mat_cols(self.ring, mat_cols, amb)
            cols.append(self.project(img))
        return cols


def tensor_index(dims):
    """Row-major index helpers for an iterated tensor of coordinate spaces."""
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    return strides


def tensor_quotient(ring, dims, links):
    """Quotient of a multi-leg tensor by pairwise balancing links.

    ``links`` is a list of tuples ``(leg_a, mats_a, leg_b, mats_b)`` with the
    two matrix families indexed by a basis of A; the relations imposed are
    ``mats_a[k] on leg_a  -  mats_b[k] on leg_b`` applied to every basis tensor.
    """
    strides = tensor_index(dims)
    total = 1
    for d in dims:
        total *= d
    relations = []
    for (la, mats_a, lb, mats_b) in links:
        if la == lb:
            raise ShapeError("a balancing link needs two distinct legs")
        for k in range(len(mats_a)):
            A = mats_a[k]
            B = mats_b[k]
            for base in _iter_basis_indices(dims):
                rel = {}
                ia = base[la]
                col = A[ia]
                for out_i, x in enumerate(col):
                    if x:
                        idx = _replace_index(base, la, out_i, strides)
                        rel[idx] = rel.get(idx, ring.zero) + x
                ib = base[lb]
                col = B[ib]
                for out_i, x in enumerate(col):
                    if x:
                        idx = _replace_index(base, lb, out_i, strides)
                        v = rel.get(idx, ring.zero) - x
                        if v:
                            rel[idx] = v
                        else:
                            rel.pop(idx, None)
                rel = {i: x for i, x in rel.items() if x}
                if rel:
                    relations.append(rel)
    return QuotientSpace(ring, total, relations)


def _iter_basis_indices(dims):
    idx = [0] * len(dims)
    while True:
        yield tuple(idx)
        for pos in range(len(dims) - 1, -1, -1):
            idx[pos] += 1
            if idx[pos] < dims[pos]:
                break
            idx[pos] = 0
        else:
            return


def _replace_index(base, leg, new_i, strides):
    acc = 0
    for pos, b in enumerate(base):
        acc += (new_i if pos == leg else b) * strides[pos]
    return acc


class TensorOverA(QuotientSpace):
    """Two-leg quotient M (x)_A N with the balancing pair attached.

    ``right_mats`` act on M (the A-action balanced on the left leg) and
    ``left_mats`` act on N; auxiliary action families for Takeuchi conditions
    can be attached afterwards under arbitrary labels.
    """

    def __init__(self, ring, dim_m, dim_n, right_mats, left_mats):
        if len(right_mats) != len(left_mats):
            raise ShapeError("balancing families must share the A-basis length")
        for m in right_mats:
            if len(m) != dim_m or any(len(c) != dim_m for c in m):
                raise ShapeError("left-leg action matrices of wrong shape")
        for m in left_mats:
            if len(m) != dim_n or any(len(c) != dim_n for c in m):
                raise ShapeError("right-leg action matrices of wrong shape")
        self.dim_m = dim_m
        self.dim_n = dim_n
        links = [(0, right_mats, 1, left_mats)]
        qs = tensor_quotient(ring, [dim_m, dim_n], links)
        super().__init__(ring, qs.ambient_dim, [])
        # steal the computed echelon instead of recomputing
        self.ech = qs.ech
        self.free = qs.free
        self.dim = qs.dim
        self._free_index = qs._free_index
        self.aux = {}

    def attach(self, label, leg, mats):
        """Attach an auxiliary per-A-basis action family acting on one leg."""
        self.aux[label] = (leg, mats)

    def aux_on_quotient(self, label):
        leg, mats = self._aux(label)
        out = []
        for m in mats:
            cols = self._leg_matrix_cols(leg, m)
            out.append(self.induced_map(cols))
        return out

    def _aux(self, label):
        if label not in self.aux:
            raise ShapeError(f"requested auxiliary action {label!r} absent")
        return self.aux[label]

    def _leg_matrix_cols(self, leg, m):
        ring = self.ring
        dims = [self.dim_m, self.dim_n]
        strides = tensor_index(dims)
        cols = []
        for idx in _iter_basis_indices(dims):
            flat = idx[0] * strides[0] + idx[1] * strides[1]
            col = [ring.zero] * self.ambient_dim
            for out_i, x in enumerate(m[idx[leg]]):
                if x:
                    col[_replace_index(idx, leg, out_i, strides)] = x
            cols.append((flat, col))
        cols.sort()
        return [c for _, c in cols]


def simple_tensor(ring, dims, vectors):
    """Ambient coordinates of v_1 (x) ... (x) v_k."""
    strides = tensor_index(dims)
    total = 1
    for d in dims:
        total *= d
    out = [ring.zero] * total
    def rec(pos, idx, coeff):
        if not coeff:
            return
        if pos == len(dims):
            out[idx] = out[idx] + coeff
            return
        v = vectors[pos]
        for i, x in enumerate(v):
            if x:
                rec(pos + 1, idx + i * strides[pos], coeff * x)
    rec(0, 0, ring.one)
    return out


def apply_on_leg(ring, dims, vec, leg, mat_cols):
    """Apply a linear map to one leg of a multi-leg ambient vector."""
    strides = tensor_index(dims)
    out = [ring.zero] * len(vec)
    d = dims[leg]
    st = strides[leg]
    for idx, c in enumerate(vec):
        if not c:
            continue
        i = (idx // st) % d
        base = idx - i * st
        for out_i, x in enumerate(mat_cols[i]):
            if x:
                j = base + out_i * st
                out[j] = out[j] + c * x
    return out


def tensor_pair(ring, n, m, u, v):
    """Ambient coordinates of u (x) v inside an n*m space."""
    out = [ring.zero] * (n * m)
    for i, a in enumerate(u):
        if a:
            row = i * m
            for j, b in enumerate(v):
                if b:
                    out[row + j] = out[row + j] + a * b
    return out


def flip_pair(ring, n, m, vec):
    """x (x) y -> y (x) x on ambient coordinates (n*m -> m*n)."""
    out = [ring.zero] * (n * m)
    for idx, c in enumerate(vec):
        if c:
            i, j = divmod(idx, m)
            out[j * n + i] = c
    return out


def pair_product(alg, x, y):
    """Componentwise product of two ambient vectors in U (x) U."""
    ring = alg.ring
    n = alg.dim
    out = [ring.zero] * (n * n)
    xs = [(divmod(i, n), c) for i, c in enumerate(x) if c]
    ys = [(divmod(j, n), c) for j, c in enumerate(y) if c]
    for (p, q), a in xs:
        for (r, s), b in ys:
            c = a * b
            left = alg.mul[p][r]
            right = alg.mul[q][s]
            for k, lv in enumerate(left):
                if lv:
                    row = k * n
                    clv = c * lv
                    for l, rv in enumerate(right):
                        if rv:
                            out[row + l] = out[row + l] + clv * rv
    return out


def tensor_over_A(M: ABimodule, N: ABimodule, right_label="blacktriangleleft",
                  left_label="triangleright"):
    """M (x)_A N balanced through a right action on M and a left action on N."""
    if M.ring != N.ring:
        raise ShapeError("mismatched scalar kinds")
    R = M.action(right_label)
    L = N.action(left_label)
    if len(R) != len(L):
        raise ShapeError("actions over different base algebras")
    return TensorOverA(M.ring, M.dim, N.dim, R, L)


def takeuchi_subspace(T: TensorOverA, left_label, right_label):
    """Basis of {x in T : aux_left(a) x = aux_right(a) x  for all basis a}.

    The two labels name auxiliary families previously attached to ``T``;
    computed as an intersection of kernels on the quotient coordinates.
    """
    ring = T.ring
    lmaps = T.aux_on_quotient(left_label)
    rmaps = T.aux_on_quotient(right_label)
    rows = []
    for lm, rm in zip(lmaps, rmaps):
        for i in range(T.dim):
            row = [lm[j][i] - rm[j][i] for j in range(T.dim)]
            rows.append(row)
    return kernel(ring, rows, T.dim)
