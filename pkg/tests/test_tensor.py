"""Tensor-over-the-base and Takeuchi subspaces, pinned against brute force.

The expected ranks are frozen from an independent oracle implemented here:
a dense textbook row reduction over plain Fractions, with the relation
matrices spelled out by hand.
"""

from fractions import Fraction

import pytest

from bialgebroids.fixtures import BUILTIN
from bialgebroids.linalg import unit_vector, vec_eq, vec_is_zero
from bialgebroids.scalars import QQ
from bialgebroids.tensor import (ABimodule, ShapeError, TensorOverA,
                                 takeuchi_subspace, tensor_over_A, tensor_pair)


def dense_rank(rows):
    """Independent oracle: classic Gaussian elimination on Fraction lists."""
    rows = [list(map(Fraction, r)) for r in rows if any(r)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    piv = 0
    for c in range(cols):
        for r in range(rank, len(rows)):
            if rows[r][c]:
                rows[rank], rows[r] = rows[r], rows[rank]
                inv = 1 / rows[rank][c]
                rows[rank] = [inv * v for v in rows[rank]]
                for rr in range(len(rows)):
                    if rr != rank and rows[rr][c]:
                        f = rows[rr][c]
                        rows[rr] = [a - f * b for a, b in zip(rows[rr], rows[rank])]
                rank += 1
                break
    return rank


def regular_bimodule(alg):
    m = alg.dim
    bi = ABimodule(alg.ring, m, base_dim=m)
    bi.add_action("left", [alg.left_mult_matrix(unit_vector(alg.ring, m, k))
                           for k in range(m)])
    bi.add_action("right", [alg.right_mult_matrix(unit_vector(alg.ring, m, k))
                            for k in range(m)])
    return bi


def test_ground_field_tensor_is_plain():
    B = BUILTIN["c2"]()
    M = ABimodule(QQ, 2, base_dim=1)
    M.add_action("right", [[[QQ.one, QQ.zero], [QQ.zero, QQ.one]]])
    N = ABimodule(QQ, 3, base_dim=1)
    N.add_action("left", [[[QQ.one] + [QQ.zero] * 2,
                           [QQ.zero, QQ.one, QQ.zero],
                           [QQ.zero, QQ.zero, QQ.one]]])
    T = tensor_over_A(M, N, right_label="right", left_label="left")
    assert T.dim == 6
    for i in range(T.dim):
        q = unit_vector(QQ, T.dim, i)
        assert T.project(T.section(q)) == q


def test_two_point_base_regular_tensor_rank_two():
    # A = Q x Q acting on itself both ways; frozen rank 2, re-derived by the
    # dense oracle on the handwritten relation matrix
    A = BUILTIN["pair2"]().base
    bi = regular_bimodule(A)
    T = tensor_over_A(bi, bi, right_label="right", left_label="left")
    assert T.dim == 2
    relations = []
    for k in range(2):
        for i in range(2):
            for j in range(2):
                row = [Fraction(0)] * 4
                if i == k:
                    row[i * 2 + j] += 1
                if j == k:
                    row[i * 2 + j] -= 1
                relations.append(row)
    assert 4 - dense_rank(relations) == 2


def test_pair_groupoid_tensor_rank_eight():
    B = BUILTIN["pair2"]()
    T = B.coproduct_space()
    assert T.dim == 8
    # independent oracle: relations identify the row index of both legs
    relations = []
    idx = [(1, 1), (1, 2), (2, 1), (2, 2)]
    for k in (1, 2):
        for a, (i, j) in enumerate(idx):
            for b, (p, q) in enumerate(idx):
                row = [Fraction(0)] * 16
                if i == k:
                    row[a * 4 + b] += 1
                if p == k:
                    row[a * 4 + b] -= 1
                relations.append(row)
    assert 16 - dense_rank(relations) == 8
    # projection/section and relation collapse
    for i in range(T.dim):
        q = unit_vector(QQ, T.dim, i)
        assert T.project(T.section(q)) == q
    ring = B.ring
    for k in range(2):
        for a in range(4):
            for b in range(4):
                rel = [ring.zero] * 16
                lt = B.act_tgt_left()[k]
                for t, x in enumerate(lt[a]):
                    if x:
                        rel[t * 4 + b] = rel[t * 4 + b] + x
                ls = B.act_src_left()[k]
                for t, x in enumerate(ls[b]):
                    if x:
                        rel[a * 4 + t] = rel[a * 4 + t] - x
                assert vec_is_zero(T.project(rel))


def test_middle_balance_property():
    for name in ("c2", "sw4", "pair2"):
        B = BUILTIN[name]()
        T = B.coproduct_space()
        ring = B.ring
        n = B.total.dim
        for k in range(B.base.dim):
            lt = B.act_tgt_left()[k]
            ls = B.act_src_left()[k]
            for a in range(n):
                for b in range(n):
                    lhs = T.project(tensor_pair(ring, n, n, lt[a],
                                                unit_vector(ring, n, b)))
                    rhs = T.project(tensor_pair(ring, n, n,
                                                unit_vector(ring, n, a), ls[b]))
                    assert vec_eq(lhs, rhs)


def test_takeuchi_subspace_pair_groupoid():
    # oracle: quotient classes are eij (x) eil (shared row, rank 8) and the
    # balancing condition forces j == l, leaving the four diagonal classes
    # eij (x) eij; in particular the subspace contains every coproduct image
    B = BUILTIN["pair2"]()
    basis = B.takeuchi_basis()
    assert len(basis) == 4
    # the image of the coproduct sits inside
    for i in range(4):
        assert B.in_takeuchi(B.delta_class(i))
    # defining condition holds exactly on every subspace basis vector
    T = B.coproduct_space()
    for v in basis:
        for k in range(2):
            l = T.aux_on_quotient("takeuchi_l")[k]
            r = T.aux_on_quotient("takeuchi_r")[k]
            from bialgebroids.tensor import apply_mat_cols
            assert apply_mat_cols(QQ, l, v) == apply_mat_cols(QQ, r, v)


def test_takeuchi_vacuous_over_ground_field():
    B = BUILTIN["c2"]()
    assert len(B.takeuchi_basis()) == B.coproduct_space().dim


def test_violating_element_is_rejected():
    # a class built to break the balancing condition is flagged
    B = BUILTIN["broken_pair2_takeuchi"]()
    cls = B.delta_class(1)
    assert any(cls)
    assert not B.in_takeuchi(cls)


def test_degenerate_inputs_are_rejected():
    with pytest.raises(ShapeError):
        ABimodule(QQ, 0)
    from bialgebroids.algebra import StructureAlgebra
    with pytest.raises(ShapeError):
        StructureAlgebra(QQ, [], [])


def test_mismatched_scalars_are_rejected():
    from bialgebroids.scalars import PrimeField
    F = PrimeField(3)
    M = ABimodule(QQ, 1, base_dim=1)
    M.add_action("right", [[[QQ.one]]])
    N = ABimodule(F, 1, base_dim=1)
    N.add_action("left", [[[F.one]]])
    with pytest.raises(ShapeError):
        tensor_over_A(M, N, right_label="right", left_label="left")


def test_absent_auxiliary_action_is_an_error():
    B = BUILTIN["c2"]()
    T = TensorOverA(QQ, 2, 2, B.act_tgt_left(), B.act_src_left())
    with pytest.raises(ShapeError):
        takeuchi_subspace(T, "nope", "takeuchi_r")
