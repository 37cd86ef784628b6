from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bialgebroids.linalg import (LinearSystem, SingularMatrix, echelon_from_rows,
                                 inverse, kernel, mat_vec, solve, unit_vector)
from bialgebroids.scalars import HPolyRing, PrimeField, QQ


def test_solve_identity():
    b = [Fraction(3), Fraction(-1)]
    x, cert = solve(QQ, [[1, 0], [0, 1]], b, ncols=2)
    assert cert is None and x == b


def test_solve_one_dim_gf2():
    F = PrimeField(2)
    x, cert = solve(F, [[F.one]], [F.one], ncols=1)
    assert cert is None and x == [F.one]


def test_certificate_for_inconsistent_system():
    # 0 * x = 1 has left-kernel certificate c = 1
    x, cert = solve(QQ, [[Fraction(0)]], [Fraction(1)], ncols=1)
    assert x is None
    assert cert == [Fraction(1)]
    rows = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]]
    x, cert = solve(QQ, rows, [Fraction(1), Fraction(2)], ncols=2)
    assert x is None
    acc = sum(c * b for c, b in zip(cert, [Fraction(1), Fraction(2)]))
    assert acc != 0
    for j in range(2):
        assert sum(c * rows[i][j] for i, c in enumerate(cert)) == 0


mat22 = st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2),
                 min_size=2, max_size=3)


@settings(max_examples=60)
@given(mat22, st.lists(st.integers(-4, 4), min_size=2, max_size=2))
def test_solve_or_certify(rows_int, xvec):
    rows = [[Fraction(v) for v in r] for r in rows_int]
    x0 = [Fraction(v) for v in xvec]
    b = mat_vec(QQ, rows, x0)
    x, cert = solve(QQ, rows, b, ncols=2)
    assert cert is None
    assert mat_vec(QQ, rows, x) == b


@settings(max_examples=60)
@given(mat22)
def test_kernel_annihilates(rows_int):
    rows = [[Fraction(v) for v in r] for r in rows_int]
    for k in kernel(QQ, rows, 2):
        assert any(k)
        assert all(v == 0 for v in mat_vec(QQ, rows, k))
    ech = echelon_from_rows(QQ, rows, 2)
    assert ech.rank + len(kernel(QQ, rows, 2)) == 2


def test_inverse_round_trip_and_singular():
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    Ainv = inverse(QQ, A)
    from bialgebroids.linalg import mat_mul
    assert mat_mul(QQ, A, Ainv) == [[1, 0], [0, 1]]
    with pytest.raises(SingularMatrix) as err:
        inverse(QQ, [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]])
    cert = err.value.certificate
    assert cert is not None and any(cert)


def test_inverse_over_truncated_ring():
    R = HPolyRing(5, 3)
    one, h = R.one, R.h
    A = [[one + h, h], [R.zero, one]]
    Ainv = inverse(R, A)
    from bialgebroids.linalg import mat_mul
    ident = [[one, R.zero], [R.zero, one]]
    assert mat_mul(R, A, Ainv) == ident
    with pytest.raises(SingularMatrix) as err:
        inverse(R, [[h, R.zero], [R.zero, one]])
    assert err.value.certificate is not None


def test_linear_system_reuses_factorisation():
    rows = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)],
            [Fraction(1), Fraction(3)]]
    sys_ = LinearSystem(QQ, rows, 2)
    assert sys_.is_unique()
    for x0 in ([Fraction(1), Fraction(0)], [Fraction(-2), Fraction(5)]):
        b = mat_vec(QQ, rows, x0)
        x, cert = sys_.solve(b)
        assert x == x0


def test_echelon_is_canonical_for_the_span():
    rows_a = [[Fraction(1), Fraction(2), Fraction(0)],
              [Fraction(0), Fraction(0), Fraction(1)]]
    rows_b = [[Fraction(2), Fraction(4), Fraction(2)],
              [Fraction(0), Fraction(0), Fraction(3)],
              [Fraction(1), Fraction(2), Fraction(1)]]
    e1 = echelon_from_rows(QQ, rows_a, 3)
    e2 = echelon_from_rows(QQ, rows_b, 3)
    assert e1.rows == e2.rows
