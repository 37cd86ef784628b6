"""Left and right bialgebroids, their axiom suites, and (co)module containers.

Chirality is a type-level distinction: ``LeftBialgebroid`` and
``RightBialgebroid`` are separate classes and never flag-switched.  The four
base-algebra actions on the total algebra follow one fixed convention,

    a trl u  = s(a) u      (left action through the source)
    u trr b  = t(b) u      (right action through the target, by left mult)
    a btl u  = u t(a)      (left action through the target, by right mult)
    u btr b  = u s(b)      (right action through the source, by right mult)

so every balanced tensor product and Takeuchi-style condition used anywhere in
the package is assembled from these four matrix families.
"""

from __future__ import annotations

from .algebra import StructureAlgebra, algebra_hom_failures
from .linalg import unit_vector, vec_eq, vec_is_zero, echelon_from_rows, to_sparse
from .reports import Report
from .tensor import (ShapeError, TensorOverA, apply_mat_cols, apply_on_leg,
                     pair_product, simple_tensor, takeuchi_subspace,
                     tensor_pair, tensor_quotient, flip_pair)


def _mat_as_cols(mat, nrows, ncols, what):
    if len(mat) != ncols or any(len(c) != nrows for c in mat):
        raise ShapeError(f"{what}: expected {ncols} columns of length {nrows}")
    return [list(c) for c in mat]


class _BialgebroidBase:
    """Shared caches for the quotient spaces attached to a bialgebroid."""

    def __init__(self):
        self._cache = {}

    def _cached(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    # -- the four action families (lists of column-matrices, one per A-basis)

    def act_src_left(self):
        return self._cached("Ls", lambda: [
            self.total.left_mult_matrix(self.s_elt(k)) for k in range(self.base.dim)])

    def act_tgt_left(self):
        return self._cached("Lt", lambda: [
            self.total.left_mult_matrix(self.t_elt(k)) for k in range(self.base.dim)])

    def act_src_right(self):
        return self._cached("Rs", lambda: [
            self.total.right_mult_matrix(self.s_elt(k)) for k in range(self.base.dim)])

    def act_tgt_right(self):
        return self._cached("Rt", lambda: [
            self.total.right_mult_matrix(self.t_elt(k)) for k in range(self.base.dim)])

    def s_elt(self, k):
        return self.s_cols[k]

    def t_elt(self, k):
        return self.t_cols[k]

    def apply_s(self, a):
        return apply_mat_cols(self.ring, self.s_cols, a)

    def apply_t(self, a):
        return apply_mat_cols(self.ring, self.t_cols, a)

    def counit(self, u):
        return apply_mat_cols(self.ring, self.counit_cols, u)

    def delta_lift(self, vec):
        """Ambient U (x) U lift of Delta on an arbitrary coordinate vector."""
        ring = self.ring
        n = self.total.dim
        out = [ring.zero] * (n * n)
        for i, c in enumerate(vec):
            if c:
                for idx, x in enumerate(self.delta[i]):
                    if x:
                        out[idx] = out[idx] + c * x
        return out

    def takeuchi_echelon(self):
        def build():
            basis = self.takeuchi_basis()
            return echelon_from_rows(self.ring, basis, self.coproduct_space().dim)
        return self._cached("tak_ech", build)

    def in_takeuchi(self, qvec):
        ech = self.takeuchi_echelon()
        return not ech.reduce(to_sparse(qvec))


class LeftBialgebroid(_BialgebroidBase):
    """(U, A, s, t, Delta, counit) with coproduct lift stored in U (x) U."""

    chirality = "left"

    def __init__(self, total: StructureAlgebra, base: StructureAlgebra,
                 s_cols, t_cols, delta, counit_cols, names=None):
        super().__init__()
        self.total = total
        self.base = base
        self.ring = total.ring
        if base.ring != total.ring:
            raise ShapeError("base and total ring must share scalars")
        n, m = total.dim, base.dim
        self.s_cols = _mat_as_cols(s_cols, n, m, "source map")
        self.t_cols = _mat_as_cols(t_cols, n, m, "target map")
        if len(delta) != n or any(len(v) != n * n for v in delta):
            raise ShapeError("coproduct lift of wrong shape")
        self.delta = [list(v) for v in delta]
        self.counit_cols = _mat_as_cols(counit_cols, m, n, "counit")

    # -- canonical quotient tensor spaces ---------------------------------

    def coproduct_space(self):
        """U_trr (x)_A trl_U : relations t(a)x (x) y - x (x) s(a)y."""
        def build():
            T = TensorOverA(self.ring, self.total.dim, self.total.dim,
                            self.act_tgt_left(), self.act_src_left())
            T.attach("takeuchi_l", 0, self.act_tgt_right())
            T.attach("takeuchi_r", 1, self.act_src_right())
            return T
        return self._cached("omega", build)

    def left_galois_space(self):
        """btl_U (x)_Aop U_trr : relations x t(a) (x) y - x (x) t(a)y."""
        def build():
            T = TensorOverA(self.ring, self.total.dim, self.total.dim,
                            self.act_tgt_right(), self.act_tgt_left())
            T.attach("takeuchi_l", 0, self.act_tgt_left())
            T.attach("takeuchi_r", 1, self.act_tgt_right())
            return T
        return self._cached("theta", build)

    def right_galois_space(self):
        """U_btr (x)_A trl_U : relations x s(a) (x) y - x (x) s(a)y."""
        def build():
            T = TensorOverA(self.ring, self.total.dim, self.total.dim,
                            self.act_src_right(), self.act_src_left())
            T.attach("takeuchi_l", 0, self.act_src_left())
            T.attach("takeuchi_r", 1, self.act_src_right())
            return T
        return self._cached("xi", build)

    def takeuchi_basis(self):
        return self._cached("takeuchi", lambda: takeuchi_subspace(
            self.coproduct_space(), "takeuchi_l", "takeuchi_r"))

    def triple_coproduct_space(self):
        def build():
            n = self.total.dim
            links = [(0, self.act_tgt_left(), 1, self.act_src_left()),
                     (1, self.act_tgt_left(), 2, self.act_src_left())]
            return tensor_quotient(self.ring, [n, n, n], links)
        return self._cached("omega3", build)

    def delta_class(self, i):
        return self.coproduct_space().project(self.delta[i])

    def cop(self):
        """Co-opposite bialgebroid: base opposed, source and target swapped,
        coproduct legs flipped.  Left comodules over U are right comodules
        over the co-opposite."""
        def build():
            n = self.total.dim
            delta = [flip_pair(self.ring, n, n, v) for v in self.delta]
            return LeftBialgebroid(self.total, self.base.opposite(),
                                   self.t_cols, self.s_cols, delta,
                                   self.counit_cols)
        return self._cached("cop", build)

    def map_scalars(self, new_ring, f):
        return LeftBialgebroid(
            self.total.map_scalars(new_ring, f),
            self.base.map_scalars(new_ring, f),
            [[f(x) for x in c] for c in self.s_cols],
            [[f(x) for x in c] for c in self.t_cols],
            [[f(x) for x in v] for v in self.delta],
            [[f(x) for x in c] for c in self.counit_cols])


class RightBialgebroid(_BialgebroidBase):
    """(V, B, s, t, Delta, partial) with the right-handed conventions."""

    chirality = "right"

    def __init__(self, total: StructureAlgebra, base: StructureAlgebra,
                 s_cols, t_cols, delta, counit_cols, names=None):
        super().__init__()
        self.total = total
        self.base = base
        self.ring = total.ring
        if base.ring != total.ring:
            raise ShapeError("base and total ring must share scalars")
        n, m = total.dim, base.dim
        self.s_cols = _mat_as_cols(s_cols, n, m, "source map")
        self.t_cols = _mat_as_cols(t_cols, n, m, "target map")
        if len(delta) != n or any(len(v) != n * n for v in delta):
            raise ShapeError("coproduct lift of wrong shape")
        self.delta = [list(v) for v in delta]
        self.counit_cols = _mat_as_cols(counit_cols, m, n, "counit")

    def coproduct_space(self):
        """V_btr (x)_B btl_V : relations x s(b) (x) y - x (x) y t(b)."""
        def build():
            T = TensorOverA(self.ring, self.total.dim, self.total.dim,
                            self.act_src_right(), self.act_tgt_right())
            T.attach("takeuchi_l", 0, self.act_src_left())
            T.attach("takeuchi_r", 1, self.act_tgt_left())
            return T
        return self._cached("omega_r", build)

    def left_galois_space(self):
        """V_btr (x)_B trl_V : relations x s(b) (x) y - x (x) s(b)y."""
        def build():
            T = TensorOverA(self.ring, self.total.dim, self.total.dim,
                            self.act_src_right(), self.act_src_left())
            T.attach("takeuchi_l", 0, self.act_src_left())
            T.attach("takeuchi_r", 1, self.act_src_right())
            return T
        return self._cached("pi", build)

    def takeuchi_basis(self):
        return self._cached("takeuchi", lambda: takeuchi_subspace(
            self.coproduct_space(), "takeuchi_l", "takeuchi_r"))

    def triple_coproduct_space(self):
        def build():
            n = self.total.dim
            links = [(0, self.act_src_right(), 1, self.act_tgt_right()),
                     (1, self.act_src_right(), 2, self.act_tgt_right())]
            return tensor_quotient(self.ring, [n, n, n], links)
        return self._cached("omega_r3", build)

    def delta_class(self, i):
        return self.coproduct_space().project(self.delta[i])

    def cop(self):
        def build():
            n = self.total.dim
            delta = [flip_pair(self.ring, n, n, v) for v in self.delta]
            return RightBialgebroid(self.total, self.base.opposite(),
                                    self.t_cols, self.s_cols, delta,
                                    self.counit_cols)
        return self._cached("cop", build)


# ---------------------------------------------------------------------------
# axiom suites


def _witness(alg, i, j=None):
    if j is None:
        return f"at basis {alg.names[i]}"
    return f"at basis pair ({alg.names[i]}, {alg.names[j]})"


def _class_product(B, X, Y):
    """Product of two coproduct-space classes via canonical representatives."""
    sp = B.coproduct_space()
    x = sp.section(X)
    y = sp.section(Y)
    return sp.project(pair_product(B.total, x, y))


def check_left_bialgebroid(B: LeftBialgebroid) -> Report:
    rep = Report("left bialgebroid axioms")
    ring = B.ring
    U, A = B.total, B.base
    n, m = U.dim, A.dim

    bad = A.associativity_failures()
    rep.add("base algebra associative", not bad,
            [f"at basis triple ({i},{j},{k})" for i, j, k in bad])
    bad = A.unit_failures()
    rep.add("base algebra unital", not bad, [_witness(A, i) for i in bad])
    bad = U.associativity_failures()
    rep.add("total algebra associative", not bad,
            [f"at basis triple ({i},{j},{k})" for i, j, k in bad])
    bad = U.unit_failures()
    rep.add("total algebra unital", not bad, [_witness(U, i) for i in bad])

    bad = algebra_hom_failures(A, U, B.s_cols)
    rep.add("source is an algebra morphism", not bad, [str(w) for w in bad])
    bad = algebra_hom_failures(A, U, B.t_cols, anti=True)
    rep.add("target is an algebra anti-morphism", not bad, [str(w) for w in bad])

    bad = []
    for i in range(m):
        si = B.s_elt(i)
        for j in range(m):
            tj = B.t_elt(j)
            if U.multiply(si, tj) != U.multiply(tj, si):
                bad.append(_witness(A, i, j))
    rep.add("source and target images commute", not bad, bad)

    omega = B.coproduct_space()

    one_one = omega.project(tensor_pair(ring, n, n, U.unit, U.unit))
    rep.add("coproduct of the unit",
            vec_eq(omega.project(B.delta_lift(U.unit)), one_one))

    bad = []
    for k in range(m):
        lhs = omega.project(B.delta_lift(B.s_elt(k)))
        rhs = omega.project(tensor_pair(ring, n, n, B.s_elt(k), U.unit))
        if not vec_eq(lhs, rhs):
            bad.append(_witness(A, k))
    rep.add("coproduct of source elements", not bad, bad)

    bad = []
    for k in range(m):
        lhs = omega.project(B.delta_lift(B.t_elt(k)))
        rhs = omega.project(tensor_pair(ring, n, n, U.unit, B.t_elt(k)))
        if not vec_eq(lhs, rhs):
            bad.append(_witness(A, k))
    rep.add("coproduct of target elements", not bad, bad)

    bad = []
    for i in range(n):
        if not B.in_takeuchi(B.delta_class(i)):
            bad.append(_witness(U, i))
    rep.add("coproduct lands in the Takeuchi subspace", not bad, bad)

    bad = []
    for i in range(n):
        Xi = B.delta_class(i)
        for j in range(n):
            lhs = omega.project(B.delta_lift(U.mul[i][j]))
            rhs = _class_product(B, Xi, B.delta_class(j))
            if not vec_eq(lhs, rhs):
                bad.append(_witness(U, i, j))
    rep.add("coproduct is multiplicative", not bad, bad)

    tri = B.triple_coproduct_space()
    bad = []
    for i in range(n):
        lhs = [ring.zero] * (n ** 3)
        rhs = [ring.zero] * (n ** 3)
        for idx, c in enumerate(B.delta[i]):
            if not c:
                continue
            a, b = divmod(idx, n)
            for idx2, d in enumerate(B.delta[a]):
                if d:
                    lhs[idx2 * n + b] = lhs[idx2 * n + b] + c * d
            for idx2, d in enumerate(B.delta[b]):
                if d:
                    rhs[a * n * n + idx2] = rhs[a * n * n + idx2] + c * d
        if not vec_eq(tri.project(lhs), tri.project(rhs)):
            bad.append(_witness(U, i))
    rep.add("coproduct is coassociative", not bad, bad)

    bad = []
    for i in range(n):
        acc_l = [ring.zero] * n
        acc_r = [ring.zero] * n
        for idx, c in enumerate(B.delta[i]):
            if not c:
                continue
            a, b = divmod(idx, n)
            sa = B.apply_s(B.counit(unit_vector(ring, n, a)))
            for k, x in enumerate(U.multiply(sa, unit_vector(ring, n, b))):
                if x:
                    acc_l[k] = acc_l[k] + c * x
            tb = B.apply_t(B.counit(unit_vector(ring, n, b)))
            for k, x in enumerate(U.multiply(tb, unit_vector(ring, n, a))):
                if x:
                    acc_r[k] = acc_r[k] + c * x
        ei = unit_vector(ring, n, i)
        if not vec_eq(acc_l, ei):
            bad.append(_witness(U, i) + " (source side)")
        if not vec_eq(acc_r, ei):
            bad.append(_witness(U, i) + " (target side)")
    rep.add("coproduct is counital", not bad, bad)

    rep.add("counit of the unit", vec_eq(B.counit(U.unit), A.unit))

    bad = []
    for k in range(m):
        fk = unit_vector(ring, m, k)
        if not vec_eq(B.counit(B.s_elt(k)), fk):
            bad.append(_witness(A, k) + " (source)")
        if not vec_eq(B.counit(B.t_elt(k)), fk):
            bad.append(_witness(A, k) + " (target)")
    rep.add("counit splits source and target", not bad, bad)

    bad = []
    for k in range(m):
        fk = unit_vector(ring, m, k)
        for i in range(n):
            ei = unit_vector(ring, n, i)
            lhs = B.counit(U.multiply(B.s_elt(k), ei))
            if not vec_eq(lhs, A.multiply(fk, B.counit(ei))):
                bad.append(f"left linearity at ({A.names[k]}, {U.names[i]})")
            lhs = B.counit(U.multiply(B.t_elt(k), ei))
            if not vec_eq(lhs, A.multiply(B.counit(ei), fk)):
                bad.append(f"right linearity at ({A.names[k]}, {U.names[i]})")
    rep.add("counit is an A-bimodule map", not bad, bad)

    bad = []
    for i in range(n):
        ei = unit_vector(ring, n, i)
        for j in range(n):
            ej = unit_vector(ring, n, j)
            base = B.counit(U.multiply(ei, ej))
            via_s = B.counit(U.multiply(ei, B.apply_s(B.counit(ej))))
            via_t = B.counit(U.multiply(ei, B.apply_t(B.counit(ej))))
            if not vec_eq(base, via_s):
                bad.append(_witness(U, i, j) + " (source form)")
            if not vec_eq(base, via_t):
                bad.append(_witness(U, i, j) + " (target form)")
    rep.add("counit is weakly multiplicative", not bad, bad)

    return rep


def check_right_bialgebroid(B: RightBialgebroid) -> Report:
    rep = Report("right bialgebroid axioms")
    ring = B.ring
    V, A = B.total, B.base
    n, m = V.dim, A.dim

    bad = A.associativity_failures()
    rep.add("base algebra associative", not bad,
            [f"at basis triple ({i},{j},{k})" for i, j, k in bad])
    bad = A.unit_failures()
    rep.add("base algebra unital", not bad, [_witness(A, i) for i in bad])
    bad = V.associativity_failures()
    rep.add("total algebra associative", not bad,
            [f"at basis triple ({i},{j},{k})" for i, j, k in bad])
    bad = V.unit_failures()
    rep.add("total algebra unital", not bad, [_witness(V, i) for i in bad])

    bad = algebra_hom_failures(A, V, B.s_cols)
    rep.add("source is an algebra morphism", not bad, [str(w) for w in bad])
    bad = algebra_hom_failures(A, V, B.t_cols, anti=True)
    rep.add("target is an algebra anti-morphism", not bad, [str(w) for w in bad])

    bad = []
    for i in range(m):
        si = B.s_elt(i)
        for j in range(m):
            tj = B.t_elt(j)
            if V.multiply(si, tj) != V.multiply(tj, si):
                bad.append(_witness(A, i, j))
    rep.add("source and target images commute", not bad, bad)

    omega = B.coproduct_space()

    one_one = omega.project(tensor_pair(ring, n, n, V.unit, V.unit))
    rep.add("coproduct of the unit",
            vec_eq(omega.project(B.delta_lift(V.unit)), one_one))

    # right-handed conventions: the source lands in the second leg, the
    # target in the first (mirror of the left case through both "op"s)
    bad = []
    for k in range(m):
        lhs = omega.project(B.delta_lift(B.s_elt(k)))
        rhs = omega.project(tensor_pair(ring, n, n, V.unit, B.s_elt(k)))
        if not vec_eq(lhs, rhs):
            bad.append(_witness(A, k))
    rep.add("coproduct of source elements", not bad, bad)

    bad = []
    for k in range(m):
        lhs = omega.project(B.delta_lift(B.t_elt(k)))
        rhs = omega.project(tensor_pair(ring, n, n, B.t_elt(k), V.unit))
        if not vec_eq(lhs, rhs):
            bad.append(_witness(A, k))
    rep.add("coproduct of target elements", not bad, bad)

    bad = []
    for i in range(n):
        if not B.in_takeuchi(B.delta_class(i)):
            bad.append(_witness(V, i))
    rep.add("coproduct lands in the Takeuchi subspace", not bad, bad)

    bad = []
    for i in range(n):
        Xi = B.delta_class(i)
        for j in range(n):
            lhs = omega.project(B.delta_lift(V.mul[i][j]))
            rhs = _class_product(B, Xi, B.delta_class(j))
            if not vec_eq(lhs, rhs):
                bad.append(_witness(V, i, j))
    rep.add("coproduct is multiplicative", not bad, bad)

    tri = B.triple_coproduct_space()
    bad = []
    for i in range(n):
        lhs = [ring.zero] * (n ** 3)
        rhs = [ring.zero] * (n ** 3)
        for idx, c in enumerate(B.delta[i]):
            if not c:
                continue
            a, b = divmod(idx, n)
            for idx2, d in enumerate(B.delta[a]):
                if d:
                    lhs[idx2 * n + b] = lhs[idx2 * n + b] + c * d
            for idx2, d in enumerate(B.delta[b]):
                if d:
                    rhs[a * n * n + idx2] = rhs[a * n * n + idx2] + c * d
        if not vec_eq(tri.project(lhs), tri.project(rhs)):
            bad.append(_witness(V, i))
    rep.add("coproduct is coassociative", not bad, bad)

    bad = []
    for i in range(n):
        acc_l = [ring.zero] * n
        acc_r = [ring.zero] * n
        for idx, c in enumerate(B.delta[i]):
            if not c:
                continue
            a, b = divmod(idx, n)
            # v1 btr partial(v2) = v1 s(partial v2)
            sb = B.apply_s(B.counit(unit_vector(ring, n, b)))
            for k, x in enumerate(V.multiply(unit_vector(ring, n, a), sb)):
                if x:
                    acc_l[k] = acc_l[k] + c * x
            # partial(v1) btl v2 = v2 t(partial v1)
            ta = B.apply_t(B.counit(unit_vector(ring, n, a)))
            for k, x in enumerate(V.multiply(unit_vector(ring, n, b), ta)):
                if x:
                    acc_r[k] = acc_r[k] + c * x
        ei = unit_vector(ring, n, i)
        if not vec_eq(acc_l, ei):
            bad.append(_witness(V, i) + " (source side)")
        if not vec_eq(acc_r, ei):
            bad.append(_witness(V, i) + " (target side)")
    rep.add("coproduct is counital", not bad, bad)

    rep.add("counit of the unit", vec_eq(B.counit(V.unit), A.unit))

    bad = []
    for k in range(m):
        fk = unit_vector(ring, m, k)
        if not vec_eq(B.counit(B.s_elt(k)), fk):
            bad.append(_witness(A, k) + " (source)")
        if not vec_eq(B.counit(B.t_elt(k)), fk):
            bad.append(_witness(A, k) + " (target)")
    rep.add("counit splits source and target", not bad, bad)

    bad = []
    for k in range(m):
        fk = unit_vector(ring, m, k)
        for i in range(n):
            ei = unit_vector(ring, n, i)
            lhs = B.counit(V.multiply(ei, B.t_elt(k)))
            if not vec_eq(lhs, A.multiply(fk, B.counit(ei))):
                bad.append(f"left linearity at ({A.names[k]}, {V.names[i]})")
            lhs = B.counit(V.multiply(ei, B.s_elt(k)))
            if not vec_eq(lhs, A.multiply(B.counit(ei), fk)):
                bad.append(f"right linearity at ({A.names[k]}, {V.names[i]})")
    rep.add("counit is a B-bimodule map", not bad, bad)

    bad = []
    for i in range(n):
        ei = unit_vector(ring, n, i)
        for j in range(n):
            ej = unit_vector(ring, n, j)
            base = B.counit(V.multiply(ei, ej))
            via_s = B.counit(V.multiply(B.apply_s(B.counit(ei)), ej))
            via_t = B.counit(V.multiply(B.apply_t(B.counit(ei)), ej))
            if not vec_eq(base, via_s):
                bad.append(_witness(V, i, j) + " (source form)")
            if not vec_eq(base, via_t):
                bad.append(_witness(V, i, j) + " (target form)")
    rep.add("counit is weakly multiplicative", not bad, bad)

    return rep
