"""Galois maps and translation identities, pinned against antipode oracles."""

from fractions import Fraction

import pytest

from bialgebroids.fixtures import BUILTIN
from bialgebroids.hopf import (NotHopf, galois_map, translation_map,
                               verify_hopf_identities)
from bialgebroids.linalg import unit_vector, vec_eq
from bialgebroids.scalars import QQ


def as_named_pairs(B, tau, i):
    return sorted((B.total.names[a], B.total.names[b], c)
                  for a, b, c in tau.pairs(i))


def test_involution_translations():
    B = BUILTIN["c2"]()
    for which in ("alpha_l", "alpha_r"):
        tau = translation_map(B, which)
        assert tau.pairs(1) == [(1, 1, Fraction(1))]


def sweedler_antipode():
    """Independent oracle: the antipode of the four-dimensional fixture and
    its inverse, as matrices on the basis (1, g, x, gx)."""
    S = {0: [(0, 1)], 1: [(1, 1)], 2: [(3, -1)], 3: [(2, 1)]}
    Sinv = {0: [(0, 1)], 1: [(1, 1)], 2: [(3, 1)], 3: [(2, -1)]}
    return S, Sinv


def test_four_dimensional_translations_match_the_antipode():
    B = BUILTIN["sw4"]()
    ring = B.ring
    n = 4
    S, Sinv = sweedler_antipode()

    def apply_table(table, i):
        out = [ring.zero] * n
        for j, c in table[i]:
            out[j] = out[j] + ring.of_int(c)
        return out

    tau_l = translation_map(B, "alpha_l")
    theta = B.left_galois_space()
    tau_r = translation_map(B, "alpha_r")
    xi = B.right_galois_space()
    for i in range(n):
        # plus (x) minus = u_(1) (x) S(u_(2))
        want = [ring.zero] * (n * n)
        for idx, c in enumerate(B.delta[i]):
            if c:
                a, b = divmod(idx, n)
                for t, x in enumerate(apply_table(S, b)):
                    if x:
                        want[a * n + t] = want[a * n + t] + c * x
        assert vec_eq(theta.project(tau_l.rep(i)), theta.project(want))
        # bracket translation = u_(2) (x) S^{-1}(u_(1))
        want = [ring.zero] * (n * n)
        for idx, c in enumerate(B.delta[i]):
            if c:
                a, b = divmod(idx, n)
                for t, x in enumerate(apply_table(Sinv, a)):
                    if x:
                        want[b * n + t] = want[b * n + t] + c * x
        assert vec_eq(xi.project(tau_r.rep(i)), xi.project(want))


def test_skew_primitive_translation_value():
    B = BUILTIN["sw4"]()
    tau = translation_map(B, "alpha_l")
    assert as_named_pairs(B, tau, 2) == [("g", "gx", Fraction(-1)),
                                         ("x", "1", Fraction(1))]


def test_pair_groupoid_translation_swaps_endpoints():
    B = BUILTIN["pair2"]()
    names = B.total.names
    swap = {"e11": "e11", "e12": "e21", "e21": "e12", "e22": "e22"}
    for which in ("alpha_l", "alpha_r"):
        tau = translation_map(B, which)
        for i, nm in enumerate(names):
            assert as_named_pairs(B, tau, i) == [(nm, swap[nm], Fraction(1))]


def test_one_dimensional_galois_maps_are_identity():
    B = BUILTIN["trivial"]()
    for which in ("alpha_l", "alpha_r"):
        dom, cod, cols = galois_map(B, which)
        assert cols == [[QQ.one]]


def test_group_like_galois_image():
    # alpha_l(g (x) g) = g (x) g^2 = g (x) 1
    B = BUILTIN["c2"]()
    dom, cod, cols = galois_map(B, "alpha_l")
    v = dom.project([QQ.zero, QQ.zero, QQ.zero, QQ.one])  # g (x) g
    img = [QQ.zero] * cod.dim
    for j, c in enumerate(v):
        if c:
            for t, x in enumerate(cols[j]):
                img[t] = img[t] + c * x
    want = cod.project([QQ.zero, QQ.zero, QQ.one, QQ.zero])  # g (x) 1
    assert vec_eq(img, want)


def test_pair_groupoid_right_galois_is_invertible_eight_by_eight():
    B = BUILTIN["pair2"]()
    dom, cod, cols = galois_map(B, "alpha_r")
    assert dom.dim == cod.dim == 8
    from bialgebroids.linalg import inverse
    inverse(QQ, [[cols[j][i] for j in range(8)] for i in range(8)])


def test_monoid_algebra_is_not_hopf():
    B = BUILTIN["m2"]()
    with pytest.raises(NotHopf) as err:
        translation_map(B, "alpha_l")
    cert = err.value.certificate
    assert cert is not None and any(cert)
    # the certificate is a genuine kernel vector of the Galois matrix
    dom, cod, cols = galois_map(B, "alpha_l")
    img = [QQ.zero] * cod.dim
    for j, c in enumerate(cert):
        if c:
            for t, x in enumerate(cols[j]):
                img[t] = img[t] + c * x
    assert not any(img)


def test_identity_suites_pass_on_all_hopf_fixtures():
    for name in ("trivial", "c2", "sw4", "pair2"):
        B = BUILTIN[name]()
        for suite in ("Sch", "Tch", "mixed"):
            rep = verify_hopf_identities(B, suite)
            assert rep.passed, (name, suite, rep.failure_names())


def test_sign_corrupted_translation_fails_the_counit_identity():
    # flip the sign of the inverse Galois matrix: the quotient-level
    # identities survive scaling checks but the counit contraction breaks
    B = BUILTIN["sw4"]()
    translation_map(B, "alpha_l")
    key = ("galois_inv", "alpha_l")
    B._cache[key] = [[-x for x in row] for row in B._cache[key]]
    rep = verify_hopf_identities(B, "Sch")
    assert not rep.passed
    names = rep.failure_names()
    assert any(n.startswith("Sch7") for n in names)


def test_round_trip_forward_after_translation():
    # galois o translation == canonical element, on every fixture and flavor
    for name in ("c2", "sw4", "pair2"):
        B = BUILTIN[name]()
        rep = verify_hopf_identities(B, "Sch")
        assert [c for c in rep.checks if c.name.startswith("Sch2")][0].ok
        rep = verify_hopf_identities(B, "Tch")
        assert [c for c in rep.checks if c.name.startswith("Tch2")][0].ok
