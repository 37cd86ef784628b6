"""The built-in fixture corpus.

Desk-scale structures on which every construction in the package is
exercised: the trivial bialgebroid, the order-two group algebra, the
four-dimensional quantum group with a group-like and a skew-primitive
generator, the arrow algebra of the pair groupoid on two objects, a
non-Hopf monoid bialgebra, and a truncated formal fixture over F_2[h].

Broken variants carry a single deliberate defect each, used to pin down
which axiom a checker blames.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import StructureAlgebra
from .bialgebroid import LeftBialgebroid
from .scalars import QQ, HPolyRing


def _mul_table(ring, dim, entries):
    """entries: dict (i, j) -> list of (k, coeff); missing pairs are zero."""
    mul = [[[ring.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), terms in entries.items():
        for k, c in terms:
            mul[i][j][k] = ring.of_int(c) if isinstance(c, int) else c
    return mul


def _delta(ring, dim, entries):
    """entries: dict i -> list of ((a, b), coeff)."""
    out = [[ring.zero] * (dim * dim) for _ in range(dim)]
    for i, terms in entries.items():
        for (a, b), c in terms:
            out[i][a * dim + b] = ring.of_int(c) if isinstance(c, int) else c
    return out


def trivial():
    """U = A = the ground field."""
    ring = QQ
    A = StructureAlgebra(ring, _mul_table(ring, 1, {(0, 0): [(0, 1)]}), [ring.one],
                         names=["1"])
    U = StructureAlgebra(ring, _mul_table(ring, 1, {(0, 0): [(0, 1)]}), [ring.one],
                         names=["1"])
    return LeftBialgebroid(U, A, [[ring.one]], [[ring.one]],
                           _delta(ring, 1, {0: [((0, 0), 1)]}),
                           [[ring.one]])


def c2():
    """Group algebra of the order-two group over the rationals."""
    ring = QQ
    A = StructureAlgebra(ring, _mul_table(ring, 1, {(0, 0): [(0, 1)]}), [ring.one],
                         names=["1"])
    mul = _mul_table(ring, 2, {
        (0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): [(0, 1)]})
    U = StructureAlgebra(ring, mul, [ring.one, ring.zero], names=["1", "g"])
    delta = _delta(ring, 2, {0: [((0, 0), 1)], 1: [((1, 1), 1)]})
    eps = [[ring.one], [ring.one]]
    s = [[ring.one, ring.zero]]
    return LeftBialgebroid(U, A, s, s, delta, eps)


def c2_broken_counit():
    """c2 with the counit zeroed on the group-like generator."""
    B = c2()
    eps = [[QQ.one], [QQ.zero]]
    return LeftBialgebroid(B.total, B.base, B.s_cols, B.t_cols, B.delta, eps)


def sweedler4():
    """The four-dimensional algebra <g, x | g^2=1, x^2=0, xg=-gx> with
    group-like g, skew-primitive x; basis (1, g, x, gx)."""
    ring = QQ
    A = StructureAlgebra(ring, _mul_table(ring, 1, {(0, 0): [(0, 1)]}), [ring.one],
                         names=["1"])
    ONE, G, X, GX = 0, 1, 2, 3
    mul = _mul_table(ring, 4, {
        (ONE, ONE): [(ONE, 1)], (ONE, G): [(G, 1)], (ONE, X): [(X, 1)],
        (ONE, GX): [(GX, 1)],
        (G, ONE): [(G, 1)], (G, G): [(ONE, 1)], (G, X): [(GX, 1)],
        (G, GX): [(X, 1)],
        (X, ONE): [(X, 1)], (X, G): [(GX, -1)], (X, X): [],
        (X, GX): [],
        (GX, ONE): [(GX, 1)], (GX, G): [(X, -1)], (GX, X): [],
        (GX, GX): [],
    })
    U = StructureAlgebra(ring, mul, [ring.one] + [ring.zero] * 3,
                         names=["1", "g", "x", "gx"])
    delta = _delta(ring, 4, {
        ONE: [((ONE, ONE), 1)],
        G: [((G, G), 1)],
        X: [((X, ONE), 1), ((G, X), 1)],
        GX: [((GX, G), 1), ((ONE, GX), 1)],
    })
    eps = [[ring.one], [ring.one], [ring.zero], [ring.zero]]
    s = [[ring.one, ring.zero, ring.zero, ring.zero]]
    return LeftBialgebroid(U, A, s, s, delta, eps)


def sweedler4_broken_comul():
    """sweedler4 with the coproduct of gx exchanged for a wrong group-like
    pattern; only multiplicativity of the coproduct is damaged."""
    B = sweedler4()
    ring = QQ
    delta = [list(v) for v in B.delta]
    delta[3] = _delta(ring, 4, {3: [((3, 1), 1), ((1, 3), 1)]})[3]
    return LeftBialgebroid(B.total, B.base, B.s_cols, B.t_cols, delta,
                           B.counit_cols)


def pair_groupoid2():
    """Arrow algebra of the pair groupoid on two objects: the 2x2 matrix
    units over the function algebra on the objects.

    Convention (fixed here, the transposed labelling also satisfies every
    axiom and must not be mixed in): basis arrow eij composes as
    eij * ekl = [j == k] eil, both source and target embed the functions as
    diagonal matrices, and the counit of eij is the indicator of i.  With all
    module actions given by one-sided multiplication, the diagonal embedding
    scales an arrow by the function value at its row index.
    """
    ring = QQ
    A = StructureAlgebra(ring, _mul_table(ring, 2, {
        (0, 0): [(0, 1)], (1, 1): [(1, 1)]}), [ring.one, ring.one],
        names=["d1", "d2"])
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    entries = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            entries[(a, b)] = [(idx[(i, l)], 1)] if j == k else []
    U = StructureAlgebra(ring, _mul_table(ring, 4, entries),
                         [ring.one, ring.zero, ring.zero, ring.one],
                         names=["e11", "e12", "e21", "e22"])
    delta = _delta(ring, 4, {a: [((a, a), 1)] for a in range(4)})
    eps_cols = []
    for (i, j), a in sorted(idx.items(), key=lambda kv: kv[1]):
        col = [ring.zero, ring.zero]
        col[i - 1] = ring.one
        eps_cols.append(col)
    s = [[ring.one, ring.zero, ring.zero, ring.zero],
         [ring.zero, ring.zero, ring.zero, ring.one]]
    B = LeftBialgebroid(U, A, s, s, delta, eps_cols)
    # the two matrix columns form a basis of the total algebra as a free
    # module for the source action
    B.free_basis = [[ring.one, ring.zero, ring.one, ring.zero],
                    [ring.zero, ring.one, ring.zero, ring.one]]
    return B


def pair_groupoid2_broken_takeuchi():
    """pair_groupoid2 with the coproduct of e12 bent to e12 (x) e11, which
    leaves the Takeuchi subspace (and drags the dependent coproduct axioms
    along with it)."""
    B = pair_groupoid2()
    ring = QQ
    delta = [list(v) for v in B.delta]
    delta[1] = _delta(ring, 4, {1: [((1, 0), 1)]})[1]
    return LeftBialgebroid(B.total, B.base, B.s_cols, B.t_cols, delta,
                           B.counit_cols)


def monoid2():
    """Monoid algebra of {1, e | e^2 = e}: a bialgebra that is not Hopf."""
    ring = QQ
    A = StructureAlgebra(ring, _mul_table(ring, 1, {(0, 0): [(0, 1)]}), [ring.one],
                         names=["1"])
    mul = _mul_table(ring, 2, {
        (0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): [(1, 1)]})
    U = StructureAlgebra(ring, mul, [ring.one, ring.zero], names=["1", "e"])
    delta = _delta(ring, 2, {0: [((0, 0), 1)], 1: [((1, 1), 1)]})
    eps = [[ring.one], [ring.one]]
    s = [[ring.one, ring.zero]]
    return LeftBialgebroid(U, A, s, s, delta, eps)


def truncated_primitive(trunc=None):
    """F_2[x]/(x^2) with primitive x over F_2[h]: the smallest formal fixture.

    Structure constants are exact polynomials in h; ``trunc`` is only recorded
    for downstream reduction, arithmetic here never truncates.
    """
    ring = HPolyRing(2, None)
    A = StructureAlgebra(ring, _mul_table(ring, 1, {(0, 0): [(0, 1)]}), [ring.one],
                         names=["1"])
    mul = _mul_table(ring, 2, {
        (0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): []})
    U = StructureAlgebra(ring, mul, [ring.one, ring.zero], names=["1", "x"])
    delta = _delta(ring, 2, {0: [((0, 0), 1)], 1: [((1, 0), 1), ((0, 1), 1)]})
    eps = [[ring.one], [ring.zero]]
    s = [[ring.one, ring.zero]]
    return LeftBialgebroid(U, A, s, s, delta, eps)


def derivation_coefficients(B):
    """F_2[h][y]/(y^2) with the primitive generator acting as d/dy.

    A braided commutative coefficient algebra for the truncated formal
    fixture whose counit-kernel action has h-order zero, so the rescaling
    hypotheses fail on it by design.
    """
    from .comodules import Comodule, UModule
    from .yd import YDAlgebra, YDModule

    ring = B.ring
    n = B.total.dim
    mul = _mul_table(ring, 2, {
        (0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): []})
    R_alg = StructureAlgebra(ring, mul, [ring.one, ring.zero], names=["1", "y"])
    ident = [[ring.one, ring.zero], [ring.zero, ring.one]]
    ddy = [[ring.zero, ring.zero], [ring.one, ring.zero]]
    acts = [ident, ddy]
    module = UModule(B, "left", 2, acts)
    lifts = []
    for r in range(2):
        out = [ring.zero] * (2 * n)
        out[r * n] = ring.one
        lifts.append(out)
    lmats = [ident]
    rmats = [ident]
    comodule = Comodule(B, "right", 2, lifts, left_mats=lmats, right_mats=rmats)
    yd = YDModule(B, "left-right", module, comodule)
    return YDAlgebra(yd, R_alg)


BUILTIN = {
    "trivial": trivial,
    "c2": c2,
    "sw4": sweedler4,
    "pair2": pair_groupoid2,
    "m2": monoid2,
    "ap2": truncated_primitive,
    "broken_c2_counit": c2_broken_counit,
    "broken_sw4_comul": sweedler4_broken_comul,
    "broken_pair2_takeuchi": pair_groupoid2_broken_takeuchi,
}


def write_corpus(directory):
    """Write the canonical fixture corpus; byte-stable across runs."""
    import os
    from . import files
    from .duals import left_dual

    os.makedirs(directory, exist_ok=True)
    written = {}

    def put(name, B):
        path = os.path.join(directory, name + ".json")
        files.save(B, path)
        written[name] = path

    for name in ("trivial", "c2", "sw4", "pair2", "m2",
                 "broken_c2_counit", "broken_sw4_comul",
                 "broken_pair2_takeuchi"):
        put(name, BUILTIN[name]())

    ap2 = truncated_primitive()
    ap2.quantum = (4, [0, 1])
    ap2.yd_blocks = {"derivation": derivation_coefficients(ap2)}
    put("ap2", ap2)

    bad = truncated_primitive()
    bad.quantum = (4, [0, 2])
    put("ap2_bad_degree", bad)

    dual = left_dual(pair_groupoid2()).V
    zero = [[dual.ring.zero] * dual.base.dim for _ in range(dual.total.dim)]
    from .bialgebroid import RightBialgebroid
    broken = RightBialgebroid(dual.total, dual.base, dual.s_cols, dual.t_cols,
                              dual.delta, zero)
    put("broken_pair2_dual_counit", broken)
    return written
