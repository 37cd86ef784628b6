"""Action (smash) bialgebroids and the commutant coefficient algebras.

``smash_left`` builds R # U on R (x)_A U for a braided commutative monoid R
in the left-right YD category of a left bialgebroid U; the result is a left
bialgebroid over R, right Hopf whenever U is, with an explicit translation
map.  ``smash_right`` is the mirrored V # S for right bialgebroids, left Hopf
whenever V is.  ``weyl_tilde`` extracts the commutant of the source map with
its adjoint action and coproduct coaction (with the opposite product), and
``weyl_tilde_dual`` mimics it on the left dual.
"""

from __future__ import annotations

from .algebra import StructureAlgebra
from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .comodules import Comodule, UModule
from .duals import DualData, dual_hopf_structure
from .hopf import TranslationMap, translation_map
from .linalg import LinearSystem, echelon_from_rows, kernel, to_sparse, unit_vector
from .tensor import ShapeError, TensorOverA, apply_mat_cols
from .yd import YDAlgebra, YDModule, _combine_family


class SmashBialgebroid:
    """The result of an action-bialgebroid construction.

    ``space`` is the balanced tensor underlying the total algebra, ``blgd``
    the assembled bialgebroid over the coefficient algebra; ``include_base``
    and ``include_total`` are the two canonical embeddings as column maps.
    """

    def __init__(self, blgd, space, include_base, include_total, constituents):
        self.blgd = blgd
        self.space = space
        self.include_base = include_base
        self.include_total = include_total
        self.constituents = constituents

    @property
    def total(self):
        return self.blgd.total


def _coords_solver(ring, embed_cols, ambient_dim):
    rows = [[embed_cols[j][i] for j in range(len(embed_cols))]
            for i in range(ambient_dim)]
    return LinearSystem(ring, rows, len(embed_cols))


def commutant_of_source(B):
    """Basis of {u : s(a) u = u s(a) for all a}, echelonized."""
    ring = B.ring
    n = B.total.dim
    rows = []
    for k in range(B.base.dim):
        Ls = B.act_src_left()[k]
        Rs = B.act_src_right()[k]
        for i in range(n):
            rows.append([Ls[j][i] - Rs[j][i] for j in range(n)])
    return kernel(ring, rows, n)


def weyl_tilde(U: LeftBialgebroid) -> YDAlgebra:
    """The opposite of the source commutant as a braided commutative monoid.

    Carries the adjoint action through the right Hopf translation and the
    coproduct as a coaction; the corestriction of the coproduct to the
    commutant is solved for explicitly rather than assumed.
    """
    ring = U.ring
    n = U.total.dim
    basis = commutant_of_source(U)
    d = len(basis)
    if d == 0:
        raise ShapeError("empty commutant")
    coords = _coords_solver(ring, basis, n)

    def in_commutant(vec, what):
        x, cert = coords.solve(vec)
        if x is None:
            raise ShapeError(f"{what} leaves the source commutant")
        return x

    # opposite product
    mul = [[in_commutant(U.total.multiply(basis[j], basis[i]),
                         "the opposite product") for j in range(d)]
           for i in range(d)]
    unit = in_commutant(U.total.unit, "the unit")
    R_alg = StructureAlgebra(ring, mul, unit, validate=False,
                             names=[f"w{i}" for i in range(d)])

    tau = translation_map(U, "alpha_r")
    acts = []
    for i in range(n):
        cols = []
        for w in range(d):
            acc = [ring.zero] * n
            for (p, q, c) in tau.pairs(i):
                mid = U.total.multiply(unit_vector(ring, n, p), basis[w])
                out = U.total.multiply(mid, unit_vector(ring, n, q))
                for t, x in enumerate(out):
                    if x:
                        acc[t] = acc[t] + c * x
            cols.append(in_commutant(acc, "the adjoint action"))
        acts.append(cols)
    module = UModule(U, "left", d, acts)

    # right base action on the commutant: restriction of left mult by t(a)
    right_mats = []
    for k in range(U.base.dim):
        tk = U.t_elt(k)
        right_mats.append([in_commutant(U.total.multiply(tk, basis[w]),
                                        "the right base action")
                           for w in range(d)])

    # coaction: corestrict the coproduct, solved in the balanced quotient
    T = TensorOverA(ring, d, n, right_mats, U.act_src_left())
    omega = U.coproduct_space()
    embed_cols = []
    for q in range(T.dim):
        amb = T.section(unit_vector(ring, T.dim, q))
        big = [ring.zero] * (n * n)
        for idx, c in enumerate(amb):
            if c:
                w, ui = divmod(idx, n)
                for t, x in enumerate(basis[w]):
                    if x:
                        big[t * n + ui] = big[t * n + ui] + c * x
        embed_cols.append(omega.project(big))
    emb = _coords_solver(ring, embed_cols, omega.dim)
    if not emb.is_unique():
        raise ShapeError("commutant tensor does not embed into the coproduct "
                         "codomain; cannot corestrict")
    lifts = []
    for w in range(d):
        target = omega.project(U.delta_lift(basis[w]))
        x, cert = emb.solve(target)
        if x is None:
            raise ShapeError("coproduct of a commutant element does not lie "
                             "in the commutant tensor")
        lifts.append(T.section(x))
    comodule = Comodule(U, "right", d, lifts, right_mats=right_mats)
    yd = YDModule(U, "left-right", module, comodule)
    return YDAlgebra(yd, R_alg)


def weyl_tilde_dual(data: DualData) -> YDAlgebra:
    """The mirrored commutant construction on the left dual.

    Returns the opposite of the source commutant of the dual with the right
    adjoint action through the dual translation map and the coproduct
    coaction, as a right-left braided commutative monoid over the dual.
    """
    V = data.V
    ring = V.ring
    n = V.total.dim
    basis = commutant_of_source(V)
    d = len(basis)
    if d == 0:
        raise ShapeError("empty commutant")
    coords = _coords_solver(ring, basis, n)

    def in_commutant(vec, what):
        x, cert = coords.solve(vec)
        if x is None:
            raise ShapeError(f"{what} leaves the source commutant")
        return x

    mul = [[in_commutant(V.total.multiply(basis[j], basis[i]),
                         "the opposite product") for j in range(d)]
           for i in range(d)]
    unit = in_commutant(V.total.unit, "the unit")
    S_alg = StructureAlgebra(ring, mul, unit, validate=False,
                             names=[f"wd{i}" for i in range(d)])

    tau = dual_hopf_structure(data)
    acts = []
    for i in range(n):
        cols = []
        for w in range(d):
            acc = [ring.zero] * n
            for (a, b, c) in tau.pairs(i):
                mid = V.total.multiply(unit_vector(ring, n, a), basis[w])
                out = V.total.multiply(mid, unit_vector(ring, n, b))
                for t, x in enumerate(out):
                    if x:
                        acc[t] = acc[t] + c * x
            cols.append(in_commutant(acc, "the adjoint action"))
        acts.append(cols)
    module = UModule(V, "right", d, acts)

    # left base action: restriction of right mult by t(b)
    left_mats = []
    for k in range(V.base.dim):
        tk = V.t_elt(k)
        left_mats.append([in_commutant(V.total.multiply(basis[w], tk),
                                       "the left base action")
                          for w in range(d)])

    T = TensorOverA(ring, n, d, V.act_src_right(), left_mats)
    omega = V.coproduct_space()
    embed_cols = []
    for q in range(T.dim):
        amb = T.section(unit_vector(ring, T.dim, q))
        big = [ring.zero] * (n * n)
        for idx, c in enumerate(amb):
            if c:
                vi, w = divmod(idx, d)
                row = vi * n
                for t, x in enumerate(basis[w]):
                    if x:
                        big[row + t] = big[row + t] + c * x
        embed_cols.append(omega.project(big))
    emb = _coords_solver(ring, embed_cols, omega.dim)
    if not emb.is_unique():
        raise ShapeError("commutant tensor does not embed into the coproduct "
                         "codomain; cannot corestrict")
    lifts = []
    for w in range(d):
        target = omega.project(V.delta_lift(basis[w]))
        x, cert = emb.solve(target)
        if x is None:
            raise ShapeError("coproduct of a commutant element does not lie "
                             "in the commutant tensor")
        lifts.append(T.section(x))
    comodule = Comodule(V, "left", d, lifts, left_mats=left_mats)
    yd = YDModule(V, "right-left", module, comodule)
    return YDAlgebra(yd, S_alg)


def trivial_coefficients(B) -> YDAlgebra:
    """The base algebra as the unit braided commutative monoid.

    For a left bialgebroid: counit action and target coaction.  For a right
    bialgebroid: counit action and target coaction on the other side.
    """
    ring = B.ring
    n = B.total.dim
    A = B.base
    m = A.dim
    from .tensor import tensor_pair
    if isinstance(B, LeftBialgebroid):
        acts = []
        for i in range(n):
            ei = unit_vector(ring, n, i)
            cols = [B.counit(B.total.multiply(ei, B.s_elt(k))) for k in range(m)]
            acts.append(cols)
        module = UModule(B, "left", m, acts)
        lmats = [A.left_mult_matrix(unit_vector(ring, m, k)) for k in range(m)]
        rmats = [A.right_mult_matrix(unit_vector(ring, m, k)) for k in range(m)]
        lifts = [tensor_pair(ring, m, n, A.unit, B.t_elt(k)) for k in range(m)]
        comodule = Comodule(B, "right", m, lifts, left_mats=lmats,
                            right_mats=rmats)
        yd = YDModule(B, "left-right", module, comodule)
        return YDAlgebra(yd, A)
    acts = []
    for i in range(n):
        ei = unit_vector(ring, n, i)
        cols = [B.counit(B.total.multiply(B.s_elt(k), ei)) for k in range(m)]
        acts.append(cols)
    module = UModule(B, "right", m, acts)
    lmats = [A.left_mult_matrix(unit_vector(ring, m, k)) for k in range(m)]
    rmats = [A.right_mult_matrix(unit_vector(ring, m, k)) for k in range(m)]
    lifts = [tensor_pair(ring, n, m, B.t_elt(k), A.unit) for k in range(m)]
    comodule = Comodule(B, "left", m, lifts, left_mats=lmats, right_mats=rmats)
    yd = YDModule(B, "right-left", module, comodule)
    return YDAlgebra(yd, A)


def smash_left(U: LeftBialgebroid, R: YDAlgebra, free_basis=None):
    """R # U as a left bialgebroid over R."""
    if R.flavour != "left-right" or R.owner is not U:
        raise ShapeError("smash_left needs a left-right monoid over U")
    ring = U.ring
    n = U.total.dim
    d = R.dim
    alg = R.algebra
    T = TensorOverA(ring, d, n, R.comodule.right_mats, U.act_src_left())
    q = T.dim

    sections = [T.section(unit_vector(ring, q, i)) for i in range(q)]

    def smash_product(x_amb, y_amb):
        out = [ring.zero] * (d * n)
        for idx, c in enumerate(x_amb):
            if not c:
                continue
            ri, ui = divmod(idx, n)
            for idx2, c2 in enumerate(y_amb):
                if not c2:
                    continue
                rj, uj = divmod(idx2, n)
                cc = c * c2
                for didx, x in enumerate(U.delta[ui]):
                    if not x:
                        continue
                    a, b = divmod(didx, n)
                    acted = apply_mat_cols(ring, R.module.acts[a],
                                           unit_vector(ring, d, rj))
                    rpart = alg.multiply(unit_vector(ring, d, ri), acted)
                    upart = U.total.mul[b][uj]
                    cx = cc * x
                    for t0, y0 in enumerate(rpart):
                        if y0:
                            row = t0 * n
                            for t1, y1 in enumerate(upart):
                                if y1:
                                    out[row + t1] = out[row + t1] + cx * y0 * y1
        return out

    mul = [[T.project(smash_product(sections[i], sections[j]))
            for j in range(q)] for i in range(q)]
    from .tensor import tensor_pair
    unit = T.project(tensor_pair(ring, d, n, alg.unit, U.total.unit))
    total = StructureAlgebra(ring, mul, unit, validate=False,
                             names=[f"m{i}" for i in range(q)])

    s_cols = [T.project(tensor_pair(ring, d, n, unit_vector(ring, d, r),
                                    U.total.unit)) for r in range(d)]
    t_cols = [T.project(R.comodule.coaction[r]) for r in range(d)]

    eps_cols = []
    for i in range(q):
        acc = [ring.zero] * d
        for idx, c in enumerate(sections[i]):
            if not c:
                continue
            ri, ui = divmod(idx, n)
            val = U.counit(unit_vector(ring, n, ui))
            acted = apply_mat_cols(ring,
                                   _combine_family(ring, R.comodule.right_mats,
                                                   val),
                                   unit_vector(ring, d, ri))
            for t, x in enumerate(acted):
                if x:
                    acc[t] = acc[t] + c * x
        eps_cols.append(acc)

    delta = []
    for i in range(q):
        amb = [ring.zero] * (q * q)
        for idx, c in enumerate(sections[i]):
            if not c:
                continue
            ri, ui = divmod(idx, n)
            for didx, x in enumerate(U.delta[ui]):
                if not x:
                    continue
                a, b = divmod(didx, n)
                left = T.project(tensor_pair(ring, d, n,
                                             unit_vector(ring, d, ri),
                                             unit_vector(ring, n, a)))
                right = T.project(tensor_pair(ring, d, n, alg.unit,
                                              unit_vector(ring, n, b)))
                cx = c * x
                for t0, y0 in enumerate(left):
                    if y0:
                        row = t0 * q
                        for t1, y1 in enumerate(right):
                            if y1:
                                amb[row + t1] = amb[row + t1] + cx * y0 * y1
        delta.append(amb)

    blgd = LeftBialgebroid(total, alg, s_cols, t_cols, delta, eps_cols)

    include_total = [T.project(tensor_pair(ring, d, n, alg.unit,
                                           unit_vector(ring, n, i)))
                     for i in range(n)]
    if free_basis is None:
        try:
            from .duals import default_free_basis
            fb = default_free_basis(U)
        except Exception:
            fb = None
    else:
        fb = free_basis
    if fb is not None:
        blgd.free_basis = [
            T.project(tensor_pair(ring, d, n, alg.unit, e)) for e in fb]
    sm = SmashBialgebroid(blgd, T, s_cols, include_total, (U, R))
    return sm


def smash_left_translation(sm: SmashBialgebroid) -> TranslationMap:
    """The explicit right Hopf translation on R # U from the one of U."""
    U, R = sm.constituents
    ring = U.ring
    n = U.total.dim
    d = R.dim
    T = sm.space
    blgd = sm.blgd
    q = blgd.total.dim
    tau = translation_map(U, "alpha_r")
    space = blgd.right_galois_space()
    from .tensor import tensor_pair
    cols = []
    for i in range(q):
        amb = [ring.zero] * (q * q)
        sec = T.section(unit_vector(ring, q, i))
        for idx, c in enumerate(sec):
            if not c:
                continue
            ri, ui = divmod(idx, n)
            for cidx, y in enumerate(R.comodule.coaction[ri]):
                if not y:
                    continue
                r0, r1 = divmod(cidx, n)
                for (p, qq, z) in tau.pairs(ui):
                    left = T.project(tensor_pair(ring, d, n,
                                                 unit_vector(ring, d, r0),
                                                 unit_vector(ring, n, p)))
                    right = T.project(tensor_pair(ring, d, n, R.algebra.unit,
                                                  U.total.mul[qq][r1]))
                    cyz = c * y * z
                    for t0, y0 in enumerate(left):
                        if y0:
                            row = t0 * q
                            for t1, y1 in enumerate(right):
                                if y1:
                                    amb[row + t1] = amb[row + t1] + cyz * y0 * y1
        cols.append(space.project(amb))
    return TranslationMap(blgd, "alpha_r", space, cols)


def smash_right(V: RightBialgebroid, S: YDAlgebra):
    """V # S as a right bialgebroid over S."""
    if S.flavour != "right-left" or S.owner is not V:
        raise ShapeError("smash_right needs a right-left monoid over V")
    ring = V.ring
    n = V.total.dim
    d = S.dim
    alg = S.algebra
    T = TensorOverA(ring, n, d, V.act_src_right(), S.comodule.left_mats)
    q = T.dim
    sections = [T.section(unit_vector(ring, q, i)) for i in range(q)]
    from .tensor import tensor_pair

    def smash_product(x_amb, y_amb):
        out = [ring.zero] * (n * d)
        for idx, c in enumerate(x_amb):
            if not c:
                continue
            vi, ri = divmod(idx, d)
            for idx2, c2 in enumerate(y_amb):
                if not c2:
                    continue
                vj, rj = divmod(idx2, d)
                cc = c * c2
                for didx, x in enumerate(V.delta[vj]):
                    if not x:
                        continue
                    a, b = divmod(didx, n)
                    vpart = V.total.mul[vi][a]
                    acted = apply_mat_cols(ring, S.module.acts[b],
                                           unit_vector(ring, d, ri))
                    rpart = alg.multiply(acted, unit_vector(ring, d, rj))
                    cx = cc * x
                    for t0, y0 in enumerate(vpart):
                        if y0:
                            row = t0 * d
                            for t1, y1 in enumerate(rpart):
                                if y1:
                                    out[row + t1] = out[row + t1] + cx * y0 * y1
        return out

    mul = [[T.project(smash_product(sections[i], sections[j]))
            for j in range(q)] for i in range(q)]
    unit = T.project(tensor_pair(ring, n, d, V.total.unit, alg.unit))
    total = StructureAlgebra(ring, mul, unit, validate=False,
                             names=[f"m{i}" for i in range(q)])

    s_cols = [T.project(tensor_pair(ring, n, d, V.total.unit,
                                    unit_vector(ring, d, r))) for r in range(d)]
    t_cols = [T.project(S.comodule.coaction[r]) for r in range(d)]

    par_cols = []
    for i in range(q):
        acc = [ring.zero] * d
        for idx, c in enumerate(sections[i]):
            if not c:
                continue
            vi, ri = divmod(idx, d)
            val = V.counit(unit_vector(ring, n, vi))
            acted = apply_mat_cols(ring,
                                   _combine_family(ring, S.comodule.left_mats,
                                                   val),
                                   unit_vector(ring, d, ri))
            for t, x in enumerate(acted):
                if x:
                    acc[t] = acc[t] + c * x
        par_cols.append(acc)

    delta = []
    for i in range(q):
        amb = [ring.zero] * (q * q)
        for idx, c in enumerate(sections[i]):
            if not c:
                continue
            vi, ri = divmod(idx, d)
            for didx, x in enumerate(V.delta[vi]):
                if not x:
                    continue
                a, b = divmod(didx, n)
                left = T.project(tensor_pair(ring, n, d,
                                             unit_vector(ring, n, a),
                                             alg.unit))
                right = T.project(tensor_pair(ring, n, d,
                                              unit_vector(ring, n, b),
                                              unit_vector(ring, d, ri)))
                cx = c * x
                for t0, y0 in enumerate(left):
                    if y0:
                        row = t0 * q
                        for t1, y1 in enumerate(right):
                            if y1:
                                amb[row + t1] = amb[row + t1] + cx * y0 * y1
        delta.append(amb)

    blgd = RightBialgebroid(total, alg, s_cols, t_cols, delta, par_cols)
    include_total = [T.project(tensor_pair(ring, n, d, unit_vector(ring, n, i),
                                           alg.unit))
                     for i in range(n)]
    return SmashBialgebroid(blgd, T, s_cols, include_total, (V, S))


def smash_right_translation(sm: SmashBialgebroid) -> TranslationMap:
    """The explicit left Hopf translation on V # S from the one of V."""
    V, S = sm.constituents
    ring = V.ring
    n = V.total.dim
    d = S.dim
    T = sm.space
    blgd = sm.blgd
    q = blgd.total.dim
    tau = translation_map(V, "beta_l")
    space = blgd.left_galois_space()
    from .tensor import tensor_pair
    cols = []
    for i in range(q):
        amb = [ring.zero] * (q * q)
        sec = T.section(unit_vector(ring, q, i))
        for idx, c in enumerate(sec):
            if not c:
                continue
            vi, ri = divmod(idx, d)
            for cidx, y in enumerate(S.comodule.coaction[ri]):
                if not y:
                    continue
                rm1, r0 = divmod(cidx, d)
                for (a, b, z) in tau.pairs(vi):
                    left = T.project(tensor_pair(ring, n, d,
                                                 V.total.mul[rm1][a],
                                                 S.algebra.unit))
                    right = T.project(tensor_pair(ring, n, d,
                                                  unit_vector(ring, n, b),
                                                  unit_vector(ring, d, r0)))
                    cyz = c * y * z
                    for t0, y0 in enumerate(left):
                        if y0:
                            row = t0 * q
                            for t1, y1 in enumerate(right):
                                if y1:
                                    amb[row + t1] = amb[row + t1] + cyz * y0 * y1
        cols.append(space.project(amb))
    return TranslationMap(blgd, "beta_l", space, cols)
