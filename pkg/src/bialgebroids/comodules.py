"""Module and comodule containers over bialgebroids, with full axiom checks.

Comodule coactions are stored as lifts into the plain tensor product; descent
to the balanced tensor product is part of what the checkers certify.  Left
comodules over a left bialgebroid (and right comodules over a right one) are
checked through the co-opposite bialgebroid, which turns them into the two
directly axiomatised cases.
"""

from __future__ import annotations

from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .linalg import unit_vector, vec_eq
from .reports import Report
from .tensor import (ABimodule, ShapeError, TensorOverA, apply_mat_cols,
                     apply_on_leg, flip_pair, tensor_pair, tensor_quotient)


class Comodule:
    """A coordinate space with a coaction lift over an owning bialgebroid.

    ``side`` is 'right' (coaction lift in M (x) U) or 'left' (lift in
    V (x) M).  ``left_mats``/``right_mats`` are the declared base-algebra
    actions (lists of column-matrices indexed by the base's basis); the one
    the balanced tensor needs is mandatory, the other may be supplied for the
    induced-action consistency check.
    """

    def __init__(self, owner, side, dim, coaction, left_mats=None,
                 right_mats=None):
        if side not in ("left", "right"):
            raise ShapeError("comodule side must be 'left' or 'right'")
        self.owner = owner
        self.side = side
        self.dim = dim
        n = owner.total.dim
        if len(coaction) != dim or any(len(v) != dim * n for v in coaction):
            raise ShapeError("coaction lift of wrong shape")
        self.coaction = [list(v) for v in coaction]
        self.left_mats = left_mats
        self.right_mats = right_mats

    def coact(self, vec):
        ring = self.owner.ring
        out = [ring.zero] * len(self.coaction[0])
        for i, c in enumerate(vec):
            if c:
                for idx, x in enumerate(self.coaction[i]):
                    if x:
                        out[idx] = out[idx] + c * x
        return out

    def flipped(self):
        """Same data with tensor legs flipped, for the co-opposite reduction."""
        ring = self.owner.ring
        n = self.owner.total.dim
        if self.side == "right":
            co = [flip_pair(ring, self.dim, n, v) for v in self.coaction]
            side = "left"
        else:
            co = [flip_pair(ring, n, self.dim, v) for v in self.coaction]
            side = "right"
        return co, side


class UModule:
    """A left or right module over the total algebra of a bialgebroid."""

    def __init__(self, owner, side, dim, acts):
        if side not in ("left", "right"):
            raise ShapeError("module side must be 'left' or 'right'")
        n = owner.total.dim
        if len(acts) != n:
            raise ShapeError("one action matrix per total-algebra basis element")
        for m in acts:
            if len(m) != dim or any(len(c) != dim for c in m):
                raise ShapeError("action matrix of wrong shape")
        self.owner = owner
        self.side = side
        self.dim = dim
        self.acts = acts

    def act_elt(self, u):
        """Column matrix of the action of the element u."""
        ring = self.owner.ring
        cols = [[ring.zero] * self.dim for _ in range(self.dim)]
        for i, c in enumerate(u):
            if c:
                m = self.acts[i]
                for j in range(self.dim):
                    col = m[j]
                    for k, x in enumerate(col):
                        if x:
                            cols[j][k] = cols[j][k] + c * x
        return cols

    def apply(self, u, m):
        return apply_mat_cols(self.owner.ring, self.act_elt(u), m)


def check_module(mod: UModule) -> Report:
    rep = Report(f"{mod.side} module axioms")
    ring = mod.owner.ring
    U = mod.owner.total
    n = U.dim
    ident = [unit_vector(ring, mod.dim, i) for i in range(mod.dim)]
    ok = mod.act_elt(U.unit) == ident
    rep.add("unit acts as identity", ok)
    bad = []
    for i in range(n):
        Ai = mod.acts[i]
        for j in range(n):
            Aj = mod.acts[j]
            Aij = mod.act_elt(U.mul[i][j])
            if mod.side == "left":
                comp = [apply_mat_cols(ring, Ai, Aj[c]) for c in range(mod.dim)]
            else:
                comp = [apply_mat_cols(ring, Aj, Ai[c]) for c in range(mod.dim)]
            if comp != Aij:
                bad.append(f"at basis pair ({U.names[i]}, {U.names[j]})")
    rep.add("action respects multiplication", not bad, bad)
    return rep


# ---------------------------------------------------------------------------
# right comodule over a left bialgebroid


def right_comodule_space(owner: LeftBialgebroid, como: Comodule):
    if como.right_mats is None:
        raise ShapeError("a right comodule needs the right base action")
    return TensorOverA(owner.ring, como.dim, owner.total.dim,
                       como.right_mats, owner.act_src_left())


def induced_left_action(owner: LeftBialgebroid, como: Comodule):
    """a.m := m0 . counit(m1 s(a)), computed on the stored lift."""
    ring = owner.ring
    n = owner.total.dim
    out = []
    for k in range(owner.base.dim):
        sk = owner.act_src_right()[k]
        cols = []
        for i in range(como.dim):
            acc = [ring.zero] * como.dim
            v = como.coaction[i]
            for idx, c in enumerate(v):
                if not c:
                    continue
                mi, ui = divmod(idx, n)
                coeff = owner.counit(sk[ui])
                acted = apply_mat_cols(ring, _combine(ring, como.right_mats, coeff),
                                       unit_vector(ring, como.dim, mi))
                for t, x in enumerate(acted):
                    if x:
                        acc[t] = acc[t] + c * x
            cols.append(acc)
        out.append(cols)
    return out


def _combine(ring, mats, coeff):
    """Linear combination of an action family by a base-coordinate vector."""
    dim = len(mats[0])
    cols = [[ring.zero] * len(mats[0][0]) for _ in range(dim)]
    for k, c in enumerate(coeff):
        if c:
            m = mats[k]
            for j in range(dim):
                for t, x in enumerate(m[j]):
                    if x:
                        cols[j][t] = cols[j][t] + c * x
    return cols


def _check_right_comodule(owner: LeftBialgebroid, como: Comodule) -> Report:
    rep = Report("right comodule axioms")
    ring = owner.ring
    U = owner.total
    n = U.dim
    d = como.dim
    sp = right_comodule_space(owner, como)

    induced = induced_left_action(owner, como)

    if como.left_mats is not None:
        ok = all(como.left_mats[k] == induced[k] for k in range(owner.base.dim))
        rep.add("declared left action matches the induced one", ok)

    bad = []
    for k in range(owner.base.dim):
        Rk = como.right_mats[k]
        Lt = owner.act_tgt_left()[k]
        for i in range(d):
            lhs = sp.project(como.coact(Rk[i]))
            rhs = sp.project(apply_on_leg(ring, [d, n], como.coaction[i], 1, Lt))
            if not vec_eq(lhs, rhs):
                bad.append(f"at (base {owner.base.names[k]}, module {i})")
    rep.add("coaction is right linear", not bad, bad)

    bad = []
    for k in range(owner.base.dim):
        Lk = induced[k]
        Rt = owner.act_tgt_right()[k]
        for i in range(d):
            lhs = sp.project(como.coact(Lk[i]))
            rhs = sp.project(apply_on_leg(ring, [d, n], como.coaction[i], 1, Rt))
            if not vec_eq(lhs, rhs):
                bad.append(f"at (base {owner.base.names[k]}, module {i})")
    rep.add("coaction is left linear for the induced action", not bad, bad)

    bad = []
    for k in range(owner.base.dim):
        Lk = induced[k]
        Rs = owner.act_src_right()[k]
        for i in range(d):
            lhs = sp.project(apply_on_leg(ring, [d, n], como.coaction[i], 0, Lk))
            rhs = sp.project(apply_on_leg(ring, [d, n], como.coaction[i], 1, Rs))
            if not vec_eq(lhs, rhs):
                bad.append(f"at (base {owner.base.names[k]}, module {i})")
    rep.add("coaction lands in the Takeuchi part", not bad, bad)

    # coassociativity in M (x) U (x) U
    tri = tensor_quotient(ring, [d, n, n],
                          [(0, como.right_mats, 1, owner.act_src_left()),
                           (1, owner.act_tgt_left(), 2, owner.act_src_left())])
    bad = []
    for i in range(d):
        lhs = [ring.zero] * (d * n * n)
        rhs = [ring.zero] * (d * n * n)
        for idx, c in enumerate(como.coaction[i]):
            if not c:
                continue
            mi, ui = divmod(idx, n)
            for idx2, x in enumerate(como.coaction[mi]):
                if x:
                    lhs[idx2 * n + ui] = lhs[idx2 * n + ui] + c * x
            for idx2, x in enumerate(owner.delta[ui]):
                if x:
                    rhs[mi * n * n + idx2] = rhs[mi * n * n + idx2] + c * x
        if not vec_eq(tri.project(lhs), tri.project(rhs)):
            bad.append(f"at module basis {i}")
    rep.add("coaction is coassociative", not bad, bad)

    bad = []
    for i in range(d):
        acc = [ring.zero] * d
        for idx, c in enumerate(como.coaction[i]):
            if not c:
                continue
            mi, ui = divmod(idx, n)
            coeff = owner.counit(unit_vector(ring, n, ui))
            acted = apply_mat_cols(ring, _combine(ring, como.right_mats, coeff),
                                   unit_vector(ring, d, mi))
            for t, x in enumerate(acted):
                if x:
                    acc[t] = acc[t] + c * x
        if not vec_eq(acc, unit_vector(ring, d, i)):
            bad.append(f"at module basis {i}")
    rep.add("coaction is counital", not bad, bad)
    return rep


# ---------------------------------------------------------------------------
# left comodule over a right bialgebroid


def left_comodule_space(owner: RightBialgebroid, como: Comodule):
    if como.left_mats is None:
        raise ShapeError("a left comodule needs the left base action")
    return TensorOverA(owner.ring, owner.total.dim, como.dim,
                       owner.act_src_right(), como.left_mats)


def induced_right_action(owner: RightBialgebroid, como: Comodule):
    """m.b := partial(m-1 t(b)) . m0 through the declared left action."""
    ring = owner.ring
    n = owner.total.dim
    out = []
    for k in range(owner.base.dim):
        tk = owner.act_tgt_right()[k]
        cols = []
        for i in range(como.dim):
            acc = [ring.zero] * como.dim
            for idx, c in enumerate(como.coaction[i]):
                if not c:
                    continue
                vi, mi = divmod(idx, como.dim)
                coeff = owner.counit(tk[vi])
                acted = apply_mat_cols(ring, _combine(ring, como.left_mats, coeff),
                                       unit_vector(ring, como.dim, mi))
                for t, x in enumerate(acted):
                    if x:
                        acc[t] = acc[t] + c * x
            cols.append(acc)
        out.append(cols)
    return out


def _check_left_comodule(owner: RightBialgebroid, como: Comodule) -> Report:
    rep = Report("left comodule axioms")
    ring = owner.ring
    n = owner.total.dim
    d = como.dim
    sp = left_comodule_space(owner, como)

    induced = induced_right_action(owner, como)
    if como.right_mats is not None:
        ok = all(como.right_mats[k] == induced[k] for k in range(owner.base.dim))
        rep.add("declared right action matches the induced one", ok)

    bad = []
    for k in range(owner.base.dim):
        Lk = como.left_mats[k]
        Rt = owner.act_tgt_right()[k]
        for i in range(d):
            lhs = sp.project(como.coact(Lk[i]))
            rhs = sp.project(apply_on_leg(ring, [n, d], como.coaction[i], 0, Rt))
            if not vec_eq(lhs, rhs):
                bad.append(f"at (base {owner.base.names[k]}, module {i})")
    rep.add("coaction is left linear", not bad, bad)

    bad = []
    for k in range(owner.base.dim):
        Rk = induced[k]
        Lt = owner.act_tgt_left()[k]
        for i in range(d):
            lhs = sp.project(como.coact(Rk[i]))
            rhs = sp.project(apply_on_leg(ring, [n, d], como.coaction[i], 0, Lt))
            if not vec_eq(lhs, rhs):
                bad.append(f"at (base {owner.base.names[k]}, module {i})")
    rep.add("coaction is right linear for the induced action", not bad, bad)

    bad = []
    for k in range(owner.base.dim):
        Rk = induced[k]
        Ls = owner.act_src_left()[k]
        for i in range(d):
            lhs = sp.project(apply_on_leg(ring, [n, d], como.coaction[i], 1, Rk))
            rhs = sp.project(apply_on_leg(ring, [n, d], como.coaction[i], 0, Ls))
            if not vec_eq(lhs, rhs):
                bad.append(f"at (base {owner.base.names[k]}, module {i})")
    rep.add("coaction lands in the Takeuchi part", not bad, bad)

    tri = tensor_quotient(ring, [n, n, d],
                          [(0, owner.act_src_right(), 1, owner.act_tgt_right()),
                           (1, owner.act_src_right(), 2, como.left_mats)])
    bad = []
    for i in range(d):
        lhs = [ring.zero] * (n * n * d)
        rhs = [ring.zero] * (n * n * d)
        for idx, c in enumerate(como.coaction[i]):
            if not c:
                continue
            vi, mi = divmod(idx, d)
            for idx2, x in enumerate(owner.delta[vi]):
                if x:
                    lhs[idx2 * d + mi] = lhs[idx2 * d + mi] + c * x
            for idx2, x in enumerate(como.coaction[mi]):
                if x:
                    rhs[vi * n * d + idx2] = rhs[vi * n * d + idx2] + c * x
        if not vec_eq(tri.project(lhs), tri.project(rhs)):
            bad.append(f"at module basis {i}")
    rep.add("coaction is coassociative", not bad, bad)

    bad = []
    for i in range(d):
        acc = [ring.zero] * d
        for idx, c in enumerate(como.coaction[i]):
            if not c:
                continue
            vi, mi = divmod(idx, d)
            coeff = owner.counit(unit_vector(ring, n, vi))
            acted = apply_mat_cols(ring, _combine(ring, como.left_mats, coeff),
                                   unit_vector(ring, d, mi))
            for t, x in enumerate(acted):
                if x:
                    acc[t] = acc[t] + c * x
        if not vec_eq(acc, unit_vector(ring, d, i)):
            bad.append(f"at module basis {i}")
    rep.add("coaction is counital", not bad, bad)
    return rep


def check_comodule(owner, como: Comodule) -> Report:
    """Dispatch on chirality; the two crossed cases reduce to the straight
    ones over the co-opposite bialgebroid."""
    if isinstance(owner, LeftBialgebroid):
        if como.side == "right":
            return _check_right_comodule(owner, como)
        co, _ = como.flipped()
        mirrored = Comodule(owner.cop(), "right", como.dim, co,
                            left_mats=como.right_mats, right_mats=como.left_mats)
        rep = _check_right_comodule(owner.cop(), mirrored)
        rep.title = "left comodule axioms (via the co-opposite)"
        return rep
    if isinstance(owner, RightBialgebroid):
        if como.side == "left":
            return _check_left_comodule(owner, como)
        co, _ = como.flipped()
        mirrored = Comodule(owner.cop(), "left", como.dim, co,
                            left_mats=como.right_mats, right_mats=como.left_mats)
        rep = _check_left_comodule(owner.cop(), mirrored)
        rep.title = "right comodule axioms (via the co-opposite)"
        return rep
    raise ShapeError("owner must be a bialgebroid")


def forgetful_actions(container) -> ABimodule:
    """The base-algebra bimodule a container induces.

    Modules act through source and target; comodules combine their declared
    action with the counit-induced one.
    """
    owner = container.owner
    ring = owner.ring
    if isinstance(container, UModule):
        m = owner.base.dim
        if container.side == "left":
            left = [container.act_elt(owner.s_elt(k)) for k in range(m)]
            right = [container.act_elt(owner.t_elt(k)) for k in range(m)]
            bi = ABimodule(ring, container.dim, base_dim=m)
            bi.add_action("triangle_left", left)
            bi.add_action("triangle_right", right)
            return bi
        left = [container.act_elt(owner.t_elt(k)) for k in range(m)]
        right = [container.act_elt(owner.s_elt(k)) for k in range(m)]
        bi = ABimodule(ring, container.dim, base_dim=m)
        bi.add_action("blacktriangle_left", left)
        bi.add_action("blacktriangle_right", right)
        return bi
    if isinstance(container, Comodule):
        m = owner.base.dim
        bi = ABimodule(ring, container.dim, base_dim=m)
        if isinstance(owner, LeftBialgebroid) and container.side == "right":
            bi.add_action("left", induced_left_action(owner, container))
            bi.add_action("right", container.right_mats)
            return bi
        if isinstance(owner, RightBialgebroid) and container.side == "left":
            bi.add_action("left", container.left_mats)
            bi.add_action("right", induced_right_action(owner, container))
            return bi
        raise ShapeError("forgetful actions for crossed sides go through cop()")
    raise ShapeError("not a module or comodule container")
