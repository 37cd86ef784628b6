"""Exact linear algebra over the scalar rings.

Vectors are plain lists of ring elements, matrices are lists of rows.  The
workhorse is a sparse reduced-echelon accumulator (dict rows keyed by column)
with a fixed pivot rule: leftmost column carrying a unit entry.  Over a field
this is the classical RREF and hence canonical for a given span, which keeps
every derived basis and projection byte-reproducible.  Over a truncated
h-polynomial ring pivots must be units; spans without unit pivots are refused
rather than approximated.
"""

from __future__ import annotations

from .scalars import ScalarError


class SingularMatrix(ArithmeticError):
    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


def zeros(ring, n):
    return [ring.zero] * n

def unit_vector(ring, n, i):
    v = [ring.zero] * n
    v[i] = ring.one
    return v

def identity(ring, n):
    return [unit_vector(ring, n, i) for i in range(n)]

def vec_add(a, b):
    return [x + y for x, y in zip(a, b)]

def vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]

def vec_scale(c, a):
    return [c * x for x in a]

def vec_is_zero(a):
    return not any(a)

def vec_eq(a, b):
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))

def mat_vec(ring, rows, v):
    """rows: m x n, v: length n -> length m."""
    out = []
    for row in rows:
        acc = ring.zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out

def apply_columns(ring, mat_cols, v):
    """Linear map given by its columns: sum_j v[j] * col_j."""
    n = len(mat_cols[0]) if mat_cols else 0
    out = [ring.zero] * n
    for j, c in enumerate(v):
        if c:
            col = mat_cols[j]
            for i, x in enumerate(col):
                if x:
                    out[i] = out[i] + c * x
    return out

def mat_mul(ring, A, B):
    """(m x k) @ (k x n) as lists of rows."""
    if not A:
        return []
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [ring.zero] * n
        for j, c in enumerate(row):
            if c:
                brow = B[j]
                for t, x in enumerate(brow):
                    if x:
                        acc[t] = acc[t] + c * x
        out.append(acc)
    return out

def transpose(ring, A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    n = len(A[0])
    return [[row[j] for row in A] for j in range(n)]

def to_sparse(v):
    return {i: x for i, x in enumerate(v) if x}

def to_dense(ring, d, n):
    v = [ring.zero] * n
    for i, x in d.items():
        v[i] = x
    return v


class Echelon:
    """Sparse reduced echelon span accumulator with unit-pivot-leftmost rule.

    Rows are kept fully inter-reduced with pivot coefficient one, so reduction
    against the span is a single pass and the stored basis is canonical.
    """

    def __init__(self, ring, ncols):
        self.ring = ring
        self.ncols = ncols
        self.rows = {}  # pivot column -> sparse row dict

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def free_columns(self):
        return [c for c in range(self.ncols) if c not in self.rows]

    def reduce(self, vec):
        """Canonical residual of ``vec`` (sparse dict) modulo the span."""
        v = dict(vec)
        for p in sorted(set(v) & set(self.rows)):
            c = v.get(p)
            if not c:
                v.pop(p, None)
                continue
            row = self.rows[p]
            for col, x in row.items():
                nv = v.get(col, self.ring.zero) - c * x
                if nv:
                    v[col] = nv
                else:
                    v.pop(col, None)
        return v

    def _pick_pivot(self, v):
        ring = self.ring
        cols = sorted(v)
        for c in cols:
            if ring.is_unit(v[c]):
                return c
        raise ScalarError(
            "no unit pivot available; span is not split over this scalar ring")

    def add(self, vec):
        """Insert a vector; returns the new pivot column or None if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        p = self._pick_pivot(v)
        inv = self.ring.inv(v[p])
        row = {c: inv * x for c, x in v.items()}
        row[p] = self.ring.one
        # keep full reduction: eliminate the new pivot from existing rows
        for q, r in self.rows.items():
            c = r.get(p)
            if c:
                for col, x in row.items():
                    nv = r.get(col, self.ring.zero) - c * x
                    if nv:
                        r[col] = nv
                    else:
                        r.pop(col, None)
        self.rows[p] = row
        return p

    def contains(self, vec):
        return not self.reduce(vec)

    def basis_dense(self):
        return [to_dense(self.ring, self.rows[p], self.ncols) for p in self.pivots()]


def echelon_from_rows(ring, rows, ncols):
    ech = Echelon(ring, ncols)
    for r in rows:
        ech.add(to_sparse(r) if isinstance(r, list) else r)
    return ech


def kernel(ring, rows, ncols):
    """Basis of {x : A x = 0} for A given by ``rows`` (each of length ncols)."""
    ech = echelon_from_rows(ring, rows, ncols)
    piv = set(ech.rows)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        v = {f: ring.one}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(to_dense(ring, v, ncols))
    return basis


class LinearSystem:
    """Solver for A x = b with one factorisation and many right-hand sides.

    Columns of A are echelonized as vectors in R^m with combination shadows,
    so each solve is a single reduction.  Inconsistent systems over a field
    yield a left-kernel certificate row c with c.A = 0 and c.b != 0.
    """

    def __init__(self, ring, rows, ncols):
        self.ring = ring
        self.nrows = len(rows)
        self.ncols = ncols
        self.ech = Echelon(ring, self.nrows)
        self.shadow = {}  # pivot col (row index of A) -> combination over columns
        cols = transpose(ring, rows, ncols) if rows else [[] for _ in range(ncols)]
        for j in range(ncols):
            self._insert(to_sparse(cols[j]) if rows else {}, {j: ring.one})

    def _insert(self, v, sh):
        ring = self.ring
        v = dict(v)
        sh = dict(sh)
        for p in sorted(set(v) & set(self.ech.rows)):
            c = v.get(p)
            if not c:
                continue
            row = self.ech.rows[p]
            for col, x in row.items():
                nv = v.get(col, ring.zero) - c * x
                if nv:
                    v[col] = nv
                else:
                    v.pop(col, None)
            for col, x in self.shadow[p].items():
                nv = sh.get(col, ring.zero) - c * x
                if nv:
                    sh[col] = nv
                else:
                    sh.pop(col, None)
        if not v:
            return
        p = self.ech._pick_pivot(v)
        inv = ring.inv(v[p])
        row = {c: inv * x for c, x in v.items()}
        row[p] = ring.one
        shrow = {c: inv * x for c, x in sh.items()}
        for q, r in self.ech.rows.items():
            c = r.get(p)
            if c:
                for col, x in row.items():
                    nv = r.get(col, ring.zero) - c * x
                    if nv:
                        r[col] = nv
                    else:
                        r.pop(col, None)
                sq = self.shadow[q]
                for col, x in shrow.items():
                    nv = sq.get(col, ring.zero) - c * x
                    if nv:
                        sq[col] = nv
                    else:
                        sq.pop(col, None)
        self.ech.rows[p] = row
        self.shadow[p] = shrow

    @property
    def rank(self):
        return self.ech.rank

    def solve(self, b):
        """Return (solution, certificate); exactly one of the two is None."""
        ring = self.ring
        v = to_sparse(b)
        sh = {}
        for p in sorted(set(v) & set(self.ech.rows)):
            c = v.get(p)
            if not c:
                continue
            row = self.ech.rows[p]
            for col, x in row.items():
                nv = v.get(col, ring.zero) - c * x
                if nv:
                    v[col] = nv
                else:
                    v.pop(col, None)
            for col, x in self.shadow[p].items():
                nv = sh.get(col, ring.zero) + c * x
                if nv:
                    sh[col] = nv
                else:
                    sh.pop(col, None)
        if v:
            return None, self._certificate(b)
        return to_dense(ring, sh, self.ncols), None

    def _certificate(self, b):
        # The echelon stores a basis of the column span of A inside R^m; a row
        # c is a left-kernel certificate iff it annihilates that span.
        ring = self.ring
        basis = [to_dense(ring, r, self.nrows) for r in self.ech.rows.values()]
        cert_basis = kernel(ring, basis, self.nrows)
        for c in cert_basis:
            acc = ring.zero
            for x, y in zip(c, b):
                if x and y:
                    acc = acc + x * y
            if acc:
                return c
        raise AssertionError("inconsistent system without certificate")

    def is_unique(self):
        return self.rank == self.ncols


def solve(ring, rows, b, ncols=None):
    """One-shot solve; returns (solution, certificate)."""
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return LinearSystem(ring, rows, n).solve(b)


def inverse(ring, rows):
    """Inverse of a square matrix given by rows; raises SingularMatrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ScalarError("inverse of a non-square matrix")
    try:
        sys = LinearSystem(ring, rows, n)
    except ScalarError:
        # over a truncated h-ring a column without unit pivot means the
        # residue matrix mod h is already singular
        raise SingularMatrix("matrix is singular",
                             certificate=_singular_certificate(ring, rows, n))
    if sys.rank < n:
        cert = _singular_certificate(ring, rows, n)
        raise SingularMatrix("matrix is singular", certificate=cert)
    cols = []
    for i in range(n):
        x, cert = sys.solve(unit_vector(ring, n, i))
        if x is None:
            raise SingularMatrix("matrix is singular", certificate=cert)
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _singular_certificate(ring, rows, n):
    from .scalars import HPolyRing
    if isinstance(ring, HPolyRing) and ring.trunc is not None:
        # certify singularity of the residue matrix mod h
        k = ring.residue_field()
        res = [[ring.residue(x) for x in row] for row in rows]
        ker = kernel(k, res, n)
        return ker[0] if ker else None
    ker = kernel(ring, rows, n)
    return ker[0] if ker else None


def rank_of(ring, rows, ncols):
    return echelon_from_rows(ring, rows, ncols).rank
