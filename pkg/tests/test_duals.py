"""Duals: axioms, pairing identities, Hopf structure, double dual."""

from fractions import Fraction

import pytest

from bialgebroids.bialgebroid import check_right_bialgebroid
from bialgebroids.duals import (NoDualBasis, arrow_action, double_dual_iso,
                                dual_hopf_structure, left_dual, right_dual)
from bialgebroids.fixtures import BUILTIN
from bialgebroids.hopf import translation_map, verify_hopf_identities
from bialgebroids.linalg import unit_vector, vec_eq
from bialgebroids.scalars import QQ

NAMES = ("trivial", "c2", "sw4", "pair2")


def test_left_duals_are_right_bialgebroids():
    for name in NAMES:
        data = left_dual(BUILTIN[name]())
        rep = check_right_bialgebroid(data.V)
        assert rep.passed, (name, rep.failure_names())
        assert data.V.total.dim == BUILTIN[name]().total.dim


def test_right_duals_are_right_bialgebroids():
    for name in NAMES:
        data = right_dual(BUILTIN[name]())
        rep = check_right_bialgebroid(data.V)
        assert rep.passed, (name, rep.failure_names())


def test_involution_dual_is_the_character_algebra():
    # frozen oracle: the functionals dual to (1, g) are the two orthogonal
    # idempotents delta_1, delta_g, multiplying pointwise
    data = left_dual(BUILTIN["c2"]())
    V = data.V
    one = QQ.one
    zero = QQ.zero
    assert V.total.mul[0][0] == [one, zero]
    assert V.total.mul[1][1] == [zero, one]
    assert V.total.mul[0][1] == [zero, zero]
    assert V.total.mul[1][0] == [zero, zero]
    assert V.total.unit == [one, one]


def test_both_duals_coincide_over_the_involution():
    ld = left_dual(BUILTIN["c2"]())
    rd = right_dual(BUILTIN["c2"]())
    assert ld.V.total.mul == rd.V.total.mul
    assert ld.V.s_cols == rd.V.s_cols and ld.V.t_cols == rd.V.t_cols
    assert ld.V.delta == rd.V.delta and ld.V.counit_cols == rd.V.counit_cols


def test_dual_basis_expansions():
    # u == sum_j s(<e^j, u>) e_j and psi == sum_j e^j <| <psi, e_j>
    for name in NAMES:
        B = BUILTIN[name]()
        data = left_dual(B)
        ring = B.ring
        n = B.total.dim
        for i in range(n):
            u = unit_vector(ring, n, i)
            acc = [ring.zero] * n
            for j in range(data.m):
                val = data.pair(data.dual_basis_elt(j), u)
                img = B.total.multiply(B.apply_s(val), data.abasis[j])
                acc = [a + x for a, x in zip(acc, img)]
            assert vec_eq(acc, u), (name, i)
        V = data.V
        for d in range(V.total.dim):
            psi = unit_vector(ring, V.total.dim, d)
            acc = [ring.zero] * V.total.dim
            for j in range(data.m):
                val = data.pair(psi, data.abasis[j])
                img = V.total.multiply(data.dual_basis_elt(j), V.apply_s(val))
                acc = [a + x for a, x in zip(acc, img)]
            assert vec_eq(acc, psi), (name, d)


def test_pairing_identities():
    for name in NAMES:
        B = BUILTIN[name]()
        data = left_dual(B)
        ring = B.ring
        n, dv, mA = B.total.dim, data.V.total.dim, B.base.dim
        for d in range(dv):
            psi = unit_vector(ring, dv, d)
            for i in range(n):
                u = unit_vector(ring, n, i)
                for k in range(mA):
                    a = unit_vector(ring, mA, k)
                    # <psi, s(a)u> = a <psi, u>
                    lhs = data.pair(psi, B.total.multiply(B.apply_s(a), u))
                    assert lhs == B.base.multiply(a, data.pair(psi, u))
                    # <psi, t(a)u> = <s_r(a)psi, u>
                    lhs = data.pair(psi, B.total.multiply(B.apply_t(a), u))
                    rhs = data.pair(data.V.total.multiply(data.V.apply_s(a), psi), u)
                    assert lhs == rhs
                    # <psi, u t(a)> = <t_r(a)psi, u>
                    lhs = data.pair(psi, B.total.multiply(u, B.apply_t(a)))
                    rhs = data.pair(data.V.total.multiply(data.V.apply_t(a), psi), u)
                    assert lhs == rhs
                    # <psi, u s(a)> = <psi t_r(a), u>
                    lhs = data.pair(psi, B.total.multiply(u, B.apply_s(a)))
                    rhs = data.pair(data.V.total.multiply(psi, data.V.apply_t(a)), u)
                    assert lhs == rhs
                    # <psi s_r(a), u> = <psi, u> a
                    lhs = data.pair(data.V.total.multiply(psi, data.V.apply_s(a)), u)
                    assert lhs == B.base.multiply(data.pair(psi, u), a)


def test_coproduct_transposes_the_multiplication():
    # <psi^(2), u btr <psi^(1), u'>> == <psi, u u'> for all basis triples
    for name in NAMES:
        B = BUILTIN[name]()
        data = left_dual(B)
        ring = B.ring
        n, dv = B.total.dim, data.V.total.dim
        for d in range(dv):
            lift = data.V.delta[d]
            for i in range(n):
                for i2 in range(n):
                    acc = [ring.zero] * B.base.dim
                    for idx, c in enumerate(lift):
                        if not c:
                            continue
                        a_idx, b_idx = divmod(idx, dv)
                        aval = data.pair(unit_vector(ring, dv, a_idx),
                                         unit_vector(ring, n, i2))
                        arg = B.total.multiply(unit_vector(ring, n, i),
                                               B.apply_s(aval))
                        val = data.pair(unit_vector(ring, dv, b_idx), arg)
                        acc = [p + c * q for p, q in zip(acc, val)]
                    want = data.pair(unit_vector(ring, dv, d),
                                     B.total.mul[i][i2])
                    assert acc == want, (name, d, i, i2)


def test_dual_hopf_two_routes_and_identity_suite():
    for name in NAMES:
        data = left_dual(BUILTIN[name]())
        formula = dual_hopf_structure(data)
        direct = translation_map(data.V, "beta_l")
        assert formula.cols == direct.cols, name
        rep = verify_hopf_identities(data.V, "Uch")
        assert rep.passed, (name, rep.failure_names())


def test_arrow_action_identity():
    # <psi^[-], u> |> psi^[+]  ==  u >-> psi  on all basis pairs
    for name in ("c2", "pair2", "sw4"):
        B = BUILTIN[name]()
        data = left_dual(B)
        tau_r = translation_map(B, "alpha_r")
        tm = dual_hopf_structure(data)
        ring = B.ring
        n, dv = B.total.dim, data.V.total.dim
        for i in range(n):
            u = unit_vector(ring, n, i)
            for d in range(dv):
                psi = unit_vector(ring, dv, d)
                want = arrow_action(data, tau_r, u, psi)
                acc = [ring.zero] * dv
                for (a_idx, b_idx, c) in tm.pairs(d):
                    val = data.pair(unit_vector(ring, dv, a_idx), u)
                    img = data.V.total.multiply(data.V.apply_s(val),
                                                unit_vector(ring, dv, b_idx))
                    acc = [p + c * q for p, q in zip(acc, img)]
                assert vec_eq(acc, want), (name, i, d)


def test_double_dual_evaluation_is_an_isomorphism():
    for name in ("trivial", "c2", "sw4", "pair2"):
        D, ev, rep = double_dual_iso(BUILTIN[name]())
        assert rep.passed, (name, rep.failure_names())


def test_double_dual_of_trivial_is_identity():
    D, ev, rep = double_dual_iso(BUILTIN["trivial"]())
    assert ev == [[QQ.one]]


def test_missing_free_basis_is_refused():
    B = BUILTIN["pair2"]()
    del B.free_basis
    with pytest.raises(NoDualBasis):
        left_dual(B)


def test_non_free_basis_is_refused():
    B = BUILTIN["pair2"]()
    ring = B.ring
    with pytest.raises(NoDualBasis):
        left_dual(B, abasis=[[ring.one, ring.zero, ring.zero, ring.zero],
                             [ring.zero, ring.one, ring.zero, ring.zero]])
