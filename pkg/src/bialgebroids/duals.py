"""Linear duals of bialgebroids over their base algebra.

The left dual of a left bialgebroid (all maps linear for the source action)
is a right bialgebroid: its product evaluates through the coproduct with a
target twist, source and target come from the counit, and the right coproduct
is characterised through a nondegenerate pairing with the multiplication and
therefore obtained by exact linear solving.  The right dual mirrors this
against the target action.  Everything requires the relevant one-sided module
to be free over the base with an explicitly given basis; non-free inputs are
refused.
"""

from __future__ import annotations

from .algebra import StructureAlgebra
from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .hopf import TranslationMap, translation_map
from .linalg import LinearSystem, inverse, unit_vector, vec_eq
from .tensor import ShapeError, apply_mat_cols


class NoDualBasis(ValueError):
    pass


def default_free_basis(B):
    """Fixture-supplied basis of the one-sided module, or the obvious one."""
    fb = getattr(B, "free_basis", None)
    if fb is not None:
        return [list(v) for v in fb]
    if B.base.dim == 1:
        return [unit_vector(B.ring, B.total.dim, i) for i in range(B.total.dim)]
    raise NoDualBasis(
        "the fixture does not supply a free module basis over its base")


class DualData:
    """A dual bialgebroid together with its pairing and dual basis.

    ``side`` is 'left' (functionals linear for the source action) or 'right'
    (linear for the target action).  Basis functionals are indexed by
    (basis element j, base coordinate beta) with flat index j*dim(A)+beta.
    """

    def __init__(self, U, V, side, abasis, coord_cols, pair_table):
        self.U = U
        self.V = V
        self.side = side
        self.abasis = abasis
        self.m = len(abasis)
        self._coord_cols = coord_cols  # columns of Phi^{-1}: U -> A^m
        self._pair_table = pair_table  # [dual index][U basis] -> A vector

    def coords(self, u):
        """A-coordinates of u in the free basis (a list of m base vectors)."""
        flat = apply_mat_cols(self.U.ring, self._coord_cols, u)
        mA = self.U.base.dim
        return [flat[j * mA:(j + 1) * mA] for j in range(self.m)]

    def pair(self, psi, u):
        """<psi, u> in the base algebra, bilinear in both arguments."""
        ring = self.U.ring
        out = [ring.zero] * self.U.base.dim
        for d, c in enumerate(psi):
            if not c:
                continue
            for i, x in enumerate(u):
                if x:
                    cell = self._pair_table[d][i]
                    cx = c * x
                    for t, y in enumerate(cell):
                        if y:
                            out[t] = out[t] + cx * y
        return out

    def dual_basis_elt(self, j):
        """The canonical dual-basis functional for the j-th basis element."""
        ring = self.U.ring
        mA = self.U.base.dim
        out = [ring.zero] * (self.m * mA)
        for beta, c in enumerate(self.U.base.unit):
            if c:
                out[j * mA + beta] = c
        return out

    def dual_basis(self):
        return [self.dual_basis_elt(j) for j in range(self.m)]


def _phi_matrix(B, abasis, through_source=True):
    """Columns of (a_1..a_m) -> sum s(a_j) e_j (or t(a_j) e_j)."""
    ring = B.ring
    n = B.total.dim
    mA = B.base.dim
    cols = []
    for j, ej in enumerate(abasis):
        for k in range(mA):
            g = B.s_elt(k) if through_source else B.t_elt(k)
            cols.append(B.total.multiply(g, ej))
    if len(cols) != n:
        raise NoDualBasis(
            f"free basis of length {len(abasis)} over a base of dimension {mA} "
            f"cannot span a total algebra of dimension {n}")
    return cols


def _functions_to_coords(B, values_on_basis):
    """Coordinates of a functional known by its base-algebra values."""
    ring = B.ring
    mA = B.base.dim
    out = [ring.zero] * (len(values_on_basis) * mA)
    for j, val in enumerate(values_on_basis):
        for beta, c in enumerate(val):
            out[j * mA + beta] = c
    return out


def left_dual(U: LeftBialgebroid, abasis=None):
    """The left dual as a right bialgebroid, with its pairing data."""
    ring = U.ring
    A = U.base
    n = U.total.dim
    mA = A.dim
    abasis = abasis if abasis is not None else default_free_basis(U)
    cols = _phi_matrix(U, abasis, through_source=True)
    try:
        phi_inv = inverse(ring, [[cols[j][i] for j in range(n)] for i in range(n)])
    except Exception:
        raise NoDualBasis("the supplied basis is not free over the base") from None
    coord_cols = [[phi_inv[i][j] for i in range(n)] for j in range(n)]
    m = len(abasis)

    # pairing table: <psi_{j,beta}, e_i> = a_j(e_i) * f_beta
    pair_table = []
    coords_of = []
    for i in range(n):
        flat = apply_mat_cols(ring, coord_cols, unit_vector(ring, n, i))
        coords_of.append([flat[j * mA:(j + 1) * mA] for j in range(m)])
    for j in range(m):
        for beta in range(mA):
            fb = unit_vector(ring, mA, beta)
            row = [A.multiply(coords_of[i][j], fb) for i in range(n)]
            pair_table.append(row)

    dim_v = m * mA
    if dim_v != n:
        raise NoDualBasis("dual dimension mismatch")

    def pair_basis(d, u_idx):
        return pair_table[d][u_idx]

    def pair(psi, u):
        out = [ring.zero] * mA
        for d, c in enumerate(psi):
            if not c:
                continue
            for i, x in enumerate(u):
                if x:
                    cell = pair_table[d][i]
                    cx = c * x
                    for t, y in enumerate(cell):
                        if y:
                            out[t] = out[t] + cx * y
        return out

    # product: (psi psi')(u) = <psi', t(<psi, u_(2)>) u_(1)>
    def convolve(psi, psi2):
        values = []
        for j in range(m):
            ej = abasis[j]
            du = [ring.zero] * (n * n)
            for i, c in enumerate(ej):
                if c:
                    for idx, x in enumerate(U.delta[i]):
                        if x:
                            du[idx] = du[idx] + c * x
            acc = [ring.zero] * mA
            for idx, c in enumerate(du):
                if not c:
                    continue
                p, q = divmod(idx, n)
                a = pair(psi, unit_vector(ring, n, q))
                arg = U.total.multiply(U.apply_t(a), unit_vector(ring, n, p))
                val = pair(psi2, arg)
                for t, y in enumerate(val):
                    if y:
                        acc[t] = acc[t] + c * y
            values.append(acc)
        return _functions_to_coords(U, values)

    basis_v = [unit_vector(ring, dim_v, d) for d in range(dim_v)]
    mul = [[convolve(basis_v[i], basis_v[j]) for j in range(dim_v)]
           for i in range(dim_v)]
    unit_values = [U.counit(abasis[j]) for j in range(m)]
    unit_v = _functions_to_coords(U, unit_values)
    V_alg = StructureAlgebra(ring, mul, unit_v, validate=False,
                             names=[f"psi{j}_{beta}" for j in range(m)
                                    for beta in range(mA)])

    # source: a -> counit(.)a ; target: a -> counit(. t(a))
    s_cols = []
    t_cols = []
    for k in range(mA):
        fk = unit_vector(ring, mA, k)
        s_vals = [A.multiply(U.counit(abasis[j]), fk) for j in range(m)]
        s_cols.append(_functions_to_coords(U, s_vals))
        t_vals = [U.counit(U.total.multiply(abasis[j], U.apply_t(fk)))
                  for j in range(m)]
        t_cols.append(_functions_to_coords(U, t_vals))

    partial_cols = [pair(basis_v[d], U.total.unit) for d in range(dim_v)]

    V = RightBialgebroid(V_alg, A, s_cols, t_cols,
                         [[ring.zero] * (dim_v * dim_v)] * dim_v, partial_cols)
    data = DualData(U, V, "left", abasis, coord_cols, pair_table)

    # right coproduct by solving the pairing characterisation
    delta = _solve_right_coproduct(data)
    V = RightBialgebroid(V_alg, A, s_cols, t_cols, delta, partial_cols)
    data.V = V
    return data


def _solve_right_coproduct(data: DualData):
    """Solve <X2, u s(<X1, u'>)> = psi(u u') for X in the coproduct space."""
    U, V = data.U, data.V
    ring = U.ring
    n = U.total.dim
    mA = U.base.dim
    sp = V.coproduct_space()
    dim_v = V.total.dim

    def eval_simple(a_idx, b_idx, u_idx, u2_idx):
        aval = data.pair(unit_vector(ring, dim_v, a_idx),
                         unit_vector(ring, n, u2_idx))
        arg = U.total.multiply(unit_vector(ring, n, u_idx), U.apply_s(aval))
        return data.pair(unit_vector(ring, dim_v, b_idx), arg)

    rows = []
    cols_amb = [sp.section(unit_vector(ring, sp.dim, q)) for q in range(sp.dim)]
    for u_idx in range(n):
        for u2_idx in range(n):
            for t in range(mA):
                row = []
                for q in range(sp.dim):
                    acc = ring.zero
                    for idx, c in enumerate(cols_amb[q]):
                        if c:
                            a_idx, b_idx = divmod(idx, dim_v)
                            acc = acc + c * eval_simple(a_idx, b_idx,
                                                        u_idx, u2_idx)[t]
                    row.append(acc)
                rows.append(row)
    system = LinearSystem(ring, rows, sp.dim)
    if not system.is_unique():
        raise NoDualBasis("dual coproduct system is degenerate")
    delta = []
    for d in range(dim_v):
        rhs = []
        psi = unit_vector(ring, dim_v, d)
        for u_idx in range(n):
            for u2_idx in range(n):
                prod = U.total.mul[u_idx][u2_idx]
                val = data.pair(psi, prod)
                rhs.extend(val)
        x, cert = system.solve(rhs)
        if x is None:
            raise NoDualBasis("dual coproduct system is inconsistent")
        delta.append(sp.section(x))
    return delta


def right_dual(U: LeftBialgebroid, abasis=None):
    """The right dual (functionals linear for the target action)."""
    ring = U.ring
    A = U.base
    n = U.total.dim
    mA = A.dim
    abasis = abasis if abasis is not None else default_free_basis(U)
    cols = _phi_matrix(U, abasis, through_source=False)
    try:
        phi_inv = inverse(ring, [[cols[j][i] for j in range(n)] for i in range(n)])
    except Exception:
        raise NoDualBasis("the supplied basis is not free over the base") from None
    coord_cols = [[phi_inv[i][j] for i in range(n)] for j in range(n)]
    m = len(abasis)

    pair_table = []
    coords_of = []
    for i in range(n):
        flat = apply_mat_cols(ring, coord_cols, unit_vector(ring, n, i))
        coords_of.append([flat[j * mA:(j + 1) * mA] for j in range(m)])
    # <phi_{j,beta}, u> = f_beta * a_j(u)
    for j in range(m):
        for beta in range(mA):
            fb = unit_vector(ring, mA, beta)
            row = [A.multiply(fb, coords_of[i][j]) for i in range(n)]
            pair_table.append(row)
    dim_v = m * mA

    def pair(phi, u):
        out = [ring.zero] * mA
        for d, c in enumerate(phi):
            if not c:
                continue
            for i, x in enumerate(u):
                if x:
                    cell = pair_table[d][i]
                    cx = c * x
                    for t, y in enumerate(cell):
                        if y:
                            out[t] = out[t] + cx * y
        return out

    # product: (phi phi')(u) = <phi', s(<phi, u_(1)>) u_(2)>
    def convolve(phi, phi2):
        values = []
        for j in range(m):
            ej = abasis[j]
            du = [ring.zero] * (n * n)
            for i, c in enumerate(ej):
                if c:
                    for idx, x in enumerate(U.delta[i]):
                        if x:
                            du[idx] = du[idx] + c * x
            acc = [ring.zero] * mA
            for idx, c in enumerate(du):
                if not c:
                    continue
                p, q = divmod(idx, n)
                a = pair(phi, unit_vector(ring, n, p))
                arg = U.total.multiply(U.apply_s(a), unit_vector(ring, n, q))
                val = pair(phi2, arg)
                for t, y in enumerate(val):
                    if y:
                        acc[t] = acc[t] + c * y
            values.append(acc)
        return _functions_to_coords(U, values)

    basis_v = [unit_vector(ring, dim_v, d) for d in range(dim_v)]
    mul = [[convolve(basis_v[i], basis_v[j]) for j in range(dim_v)]
           for i in range(dim_v)]
    unit_values = [U.counit(abasis[j]) for j in range(m)]
    unit_v = _functions_to_coords(U, unit_values)
    V_alg = StructureAlgebra(ring, mul, unit_v, validate=False,
                             names=[f"phi{j}_{beta}" for j in range(m)
                                    for beta in range(mA)])

    # source: a -> a counit(.) ; target: a -> counit(. s(a))
    s_cols = []
    t_cols = []
    for k in range(mA):
        fk = unit_vector(ring, mA, k)
        s_vals = [A.multiply(fk, U.counit(abasis[j])) for j in range(m)]
        s_cols.append(_functions_to_coords(U, s_vals))
        t_vals = [U.counit(U.total.multiply(abasis[j], U.apply_s(fk)))
                  for j in range(m)]
        t_cols.append(_functions_to_coords(U, t_vals))

    partial_cols = [pair(basis_v[d], U.total.unit) for d in range(dim_v)]

    V = RightBialgebroid(V_alg, A, s_cols, t_cols,
                         [[ring.zero] * (dim_v * dim_v)] * dim_v, partial_cols)
    data = DualData(U, V, "right", abasis, coord_cols, pair_table)
    delta = _solve_right_coproduct_rd(data)
    V = RightBialgebroid(V_alg, A, s_cols, t_cols, delta, partial_cols)
    data.V = V
    return data


def _solve_right_coproduct_rd(data: DualData):
    """Solve <X2, u t(<X1, u'>)> = phi(u u') for the right-dual coproduct."""
    U, V = data.U, data.V
    ring = U.ring
    n = U.total.dim
    mA = U.base.dim
    sp = V.coproduct_space()
    dim_v = V.total.dim

    def eval_simple(a_idx, b_idx, u_idx, u2_idx):
        aval = data.pair(unit_vector(ring, dim_v, a_idx),
                         unit_vector(ring, n, u2_idx))
        arg = U.total.multiply(unit_vector(ring, n, u_idx), U.apply_t(aval))
        return data.pair(unit_vector(ring, dim_v, b_idx), arg)

    rows = []
    cols_amb = [sp.section(unit_vector(ring, sp.dim, q)) for q in range(sp.dim)]
    for u_idx in range(n):
        for u2_idx in range(n):
            for t in range(mA):
                row = []
                for q in range(sp.dim):
                    acc = ring.zero
                    for idx, c in enumerate(cols_amb[q]):
                        if c:
                            a_idx, b_idx = divmod(idx, dim_v)
                            acc = acc + c * eval_simple(a_idx, b_idx,
                                                        u_idx, u2_idx)[t]
                    row.append(acc)
                rows.append(row)
    system = LinearSystem(ring, rows, sp.dim)
    if not system.is_unique():
        raise NoDualBasis("dual coproduct system is degenerate")
    delta = []
    for d in range(dim_v):
        rhs = []
        phi = unit_vector(ring, dim_v, d)
        for u_idx in range(n):
            for u2_idx in range(n):
                prod = U.total.mul[u_idx][u2_idx]
                val = data.pair(phi, prod)
                rhs.extend(val)
        x, cert = system.solve(rhs)
        if x is None:
            raise NoDualBasis("dual coproduct system is inconsistent")
        delta.append(sp.section(x))
    return delta


def arrow_action(data: DualData, tau_r: TranslationMap, u, psi):
    """(u >-> psi)(u') := counit(u_plus s(<psi, u_minus u'>)) as dual coords."""
    U = data.U
    ring = U.ring
    n = U.total.dim
    values = []
    for j in range(data.m):
        ej = data.abasis[j]
        acc = [ring.zero] * U.base.dim
        rep = tau_r.rep_of(u)
        for idx, c in enumerate(rep):
            if not c:
                continue
            p, q = divmod(idx, n)
            arg = U.total.multiply(unit_vector(ring, n, q), ej)
            a = data.pair(psi, arg)
            val = U.counit(U.total.multiply(unit_vector(ring, n, p),
                                            U.apply_s(a)))
            for t, y in enumerate(val):
                if y:
                    acc[t] = acc[t] + c * y
        values.append(acc)
    return _functions_to_coords(U, values)


def dual_hopf_structure(data: DualData):
    """Left Hopf translation map on the left dual of a right Hopf bialgebroid.

    Built from the dual basis and the arrow action; agrees with direct
    inversion of the dual Galois map whenever the latter exists.
    """
    U, V = data.U, data.V
    ring = U.ring
    tau_r = translation_map(U, "alpha_r")
    dim_v = V.total.dim
    pi = V.left_galois_space()
    cols = []
    for d in range(dim_v):
        psi = unit_vector(ring, dim_v, d)
        amb = [ring.zero] * (dim_v * dim_v)
        for j in range(data.m):
            ej_dual = data.dual_basis_elt(j)
            act = arrow_action(data, tau_r, data.abasis[j], psi)
            for a_idx, c in enumerate(ej_dual):
                if c:
                    row = a_idx * dim_v
                    for b_idx, x in enumerate(act):
                        if x:
                            amb[row + b_idx] = amb[row + b_idx] + c * x
        cols.append(pi.project(amb))
    return TranslationMap(V, "beta_l", pi, cols)


def dual_of_right_bialgebroid(V: RightBialgebroid, data_basis):
    """The target-side dual of a right bialgebroid, as a left bialgebroid.

    ``data_basis`` is a basis of V as a free module for the action
    psi |-> psi s(b).  Functionals phi satisfy phi(psi s(b)) = phi(psi) b; the
    structure maps are the transposes of the right-bialgebroid structure
    through the pairing.  Used for the double-dual round trip.
    """
    ring = V.ring
    B = V.base
    n = V.total.dim
    mB = B.dim
    m = len(data_basis)
    cols = []
    for j, ej in enumerate(data_basis):
        for k in range(mB):
            cols.append(V.total.multiply(ej, V.s_elt(k)))
    if len(cols) != n:
        raise NoDualBasis("basis length mismatch for the right-bialgebroid dual")
    try:
        phi_inv = inverse(ring, [[cols[j][i] for j in range(n)] for i in range(n)])
    except Exception:
        raise NoDualBasis("the supplied basis is not free") from None
    coord_cols = [[phi_inv[i][j] for i in range(n)] for j in range(n)]

    coords_of = []
    for i in range(n):
        flat = apply_mat_cols(ring, coord_cols, unit_vector(ring, n, i))
        coords_of.append([flat[j * mB:(j + 1) * mB] for j in range(m)])
    pair_table = []
    # <phi_{j,beta}, psi> = f_beta * a_j(psi)
    for j in range(m):
        for beta in range(mB):
            fb = unit_vector(ring, mB, beta)
            row = [B.multiply(fb, coords_of[i][j]) for i in range(n)]
            pair_table.append(row)
    dim_d = m * mB

    def pair(phi, psi):
        out = [ring.zero] * mB
        for d, c in enumerate(phi):
            if not c:
                continue
            for i, x in enumerate(psi):
                if x:
                    cell = pair_table[d][i]
                    cx = c * x
                    for t, y in enumerate(cell):
                        if y:
                            out[t] = out[t] + cx * y
        return out

    # product: (phi phi')(psi) = phi( psi^(2) t(<phi', psi^(1)>) )
    def convolve(phi, phi2):
        values = []
        for j in range(m):
            ej = data_basis[j]
            dv = [ring.zero] * (n * n)
            for i, c in enumerate(ej):
                if c:
                    for idx, x in enumerate(V.delta[i]):
                        if x:
                            dv[idx] = dv[idx] + c * x
            acc = [ring.zero] * mB
            for idx, c in enumerate(dv):
                if not c:
                    continue
                p, q = divmod(idx, n)
                b = pair(phi2, unit_vector(ring, n, p))
                arg = V.total.multiply(unit_vector(ring, n, q), V.apply_t(b))
                val = pair(phi, arg)
                for t, y in enumerate(val):
                    if y:
                        acc[t] = acc[t] + c * y
            values.append(acc)
        return _vals_to_coords(values, mB, ring)

    def _vals_to_coords(values, mB_, ring_):
        out = [ring_.zero] * (len(values) * mB_)
        for j, val in enumerate(values):
            for beta, c in enumerate(val):
                out[j * mB_ + beta] = c
        return out

    basis_d = [unit_vector(ring, dim_d, d) for d in range(dim_d)]
    mul = [[convolve(basis_d[i], basis_d[j]) for j in range(dim_d)]
           for i in range(dim_d)]
    unit_values = [V.counit(data_basis[j]) for j in range(m)]
    unit_d = _vals_to_coords(unit_values, mB, ring)
    D_alg = StructureAlgebra(ring, mul, unit_d, validate=False)

    # source: a -> a partial(.) ; target: a -> partial(s(a) .)
    s_cols = []
    t_cols = []
    for k in range(mB):
        fk = unit_vector(ring, mB, k)
        s_vals = [B.multiply(fk, V.counit(data_basis[j])) for j in range(m)]
        s_cols.append(_vals_to_coords(s_vals, mB, ring))
        t_vals = [V.counit(V.total.multiply(V.apply_s(fk), data_basis[j]))
                  for j in range(m)]
        t_cols.append(_vals_to_coords(t_vals, mB, ring))

    eps_cols = [pair(basis_d[d], V.total.unit) for d in range(dim_d)]

    D = LeftBialgebroid(D_alg, B, s_cols, t_cols,
                        [[ring.zero] * (dim_d * dim_d)] * dim_d, eps_cols)

    # left coproduct: solve phi(psi psi') = <X1, s(<X2, psi>) psi'>
    sp = D.coproduct_space()

    def eval_simple(a_idx, b_idx, p_idx, p2_idx):
        bval = pair(unit_vector(ring, dim_d, b_idx), unit_vector(ring, n, p_idx))
        arg = V.total.multiply(V.apply_s(bval), unit_vector(ring, n, p2_idx))
        return pair(unit_vector(ring, dim_d, a_idx), arg)

    rows = []
    cols_amb = [sp.section(unit_vector(ring, sp.dim, q)) for q in range(sp.dim)]
    for p_idx in range(n):
        for p2_idx in range(n):
            for t in range(mB):
                row = []
                for q in range(sp.dim):
                    acc = ring.zero
                    for idx, c in enumerate(cols_amb[q]):
                        if c:
                            a_idx, b_idx = divmod(idx, dim_d)
                            acc = acc + c * eval_simple(a_idx, b_idx,
                                                        p_idx, p2_idx)[t]
                    row.append(acc)
                rows.append(row)
    system = LinearSystem(ring, rows, sp.dim)
    if not system.is_unique():
        raise NoDualBasis("double-dual coproduct system is degenerate")
    delta = []
    for d in range(dim_d):
        rhs = []
        phi = unit_vector(ring, dim_d, d)
        for p_idx in range(n):
            for p2_idx in range(n):
                val = pair(phi, V.total.mul[p_idx][p2_idx])
                rhs.extend(val)
        x, cert = system.solve(rhs)
        if x is None:
            raise NoDualBasis("double-dual coproduct system is inconsistent")
        delta.append(sp.section(x))

    D = LeftBialgebroid(D_alg, B, s_cols, t_cols, delta, eps_cols)
    return D, pair


def double_dual_iso(U: LeftBialgebroid, abasis=None):
    """Evaluation from U into the dual of its left dual, with a full report.

    Returns (D, columns of the evaluation map, Report); the report covers
    bijectivity and the intertwining of every structure map.
    """
    from .reports import Report
    data = left_dual(U, abasis)
    V = data.V
    ring = U.ring
    n = U.total.dim
    D, pairD = dual_of_right_bialgebroid(V, data.dual_basis())

    # ev(u) = <., u>: coordinates in D from values on the dual basis
    ev_cols = []
    mB = U.base.dim
    for i in range(n):
        ei = unit_vector(ring, n, i)
        values = [data.pair(data.dual_basis_elt(j), ei) for j in range(data.m)]
        out = [ring.zero] * (data.m * mB)
        for j, val in enumerate(values):
            for beta, c in enumerate(val):
                out[j * mB + beta] = c
        ev_cols.append(out)

    rep = Report("double dual evaluation")
    try:
        inverse(ring, [[ev_cols[j][i] for j in range(n)] for i in range(n)])
        rep.add("evaluation is bijective", True)
    except Exception:
        rep.add("evaluation is bijective", False)

    def ev(u):
        return apply_mat_cols(ring, ev_cols, u)

    bad = []
    for i in range(n):
        for j in range(n):
            lhs = ev(U.total.mul[i][j])
            rhs = D.total.multiply(ev_cols[i], ev_cols[j])
            if not vec_eq(lhs, rhs):
                bad.append(f"at basis pair ({U.total.names[i]}, {U.total.names[j]})")
    rep.add("evaluation is multiplicative", not bad, bad)
    rep.add("evaluation preserves the unit", vec_eq(ev(U.total.unit), D.total.unit))

    bad = []
    for k in range(U.base.dim):
        if not vec_eq(ev(U.s_elt(k)), D.s_elt(k)):
            bad.append(f"source at {U.base.names[k]}")
        if not vec_eq(ev(U.t_elt(k)), D.t_elt(k)):
            bad.append(f"target at {U.base.names[k]}")
    rep.add("evaluation intertwines source and target", not bad, bad)

    bad = []
    for i in range(n):
        if not vec_eq(U.counit(unit_vector(ring, n, i)), D.counit(ev_cols[i])):
            bad.append(f"at basis {U.total.names[i]}")
    rep.add("evaluation intertwines the counits", not bad, bad)

    sp = D.coproduct_space()
    bad = []
    for i in range(n):
        amb = [ring.zero] * (D.total.dim ** 2)
        for idx, c in enumerate(U.delta[i]):
            if not c:
                continue
            p, q = divmod(idx, n)
            evp, evq = ev_cols[p], ev_cols[q]
            for a_idx, x in enumerate(evp):
                if x:
                    row = a_idx * D.total.dim
                    cx = c * x
                    for b_idx, y in enumerate(evq):
                        if y:
                            amb[row + b_idx] = amb[row + b_idx] + cx * y
        lhs = sp.project(amb)
        rhs = sp.project(D.delta_lift(ev_cols[i]))
        if not vec_eq(lhs, rhs):
            bad.append(f"at basis {U.total.names[i]}")
    rep.add("evaluation intertwines the coproducts", not bad, bad)

    return D, ev_cols, rep
