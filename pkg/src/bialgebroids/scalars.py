"""Exact scalar rings: rationals, prime fields, and truncated h-polynomial rings.

Every ring exposes the same small protocol (``zero``, ``one``, ``of_int``,
``is_unit``, ``inv``, ``parse``/``dump``) while the elements themselves carry
the arithmetic through operator overloading, so generic linear algebra can be
written once.  Elements compare exactly; ``bool(x)`` is the nonzero test.
"""

from __future__ import annotations

from fractions import Fraction


class ScalarError(ArithmeticError):
    pass


class Rationals:
    """The field of rational numbers, elements are ``fractions.Fraction``."""

    kind = "rational"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def of_int(self, n):
        return Fraction(n)

    def is_unit(self, x):
        return x != 0

    def inv(self, x):
        if x == 0:
            raise ScalarError("division by zero")
        return 1 / Fraction(x)

    def div(self, a, b):
        return Fraction(a) / Fraction(b)

    def parse(self, obj):
        if isinstance(obj, str):
            return Fraction(obj)
        if isinstance(obj, int):
            return Fraction(obj)
        raise ScalarError(f"cannot parse rational from {obj!r}")

    def dump(self, x):
        return str(x)

    def describe(self):
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


def _is_probable_prime(p):
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class FpElt:
    """An element of the prime field F_p."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, FpElt):
            if other.p != self.p:
                raise ScalarError("mixed characteristics")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElt(self.p, self.v + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElt(self.p, self.v - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElt(self.p, v - self.v)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElt(self.p, self.v * v)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElt(self.p, -self.v)

    def __eq__(self, other):
        if isinstance(other, FpElt):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}"


class PrimeField:
    kind = "prime"

    def __init__(self, p):
        if not _is_probable_prime(p):
            raise ScalarError(f"{p} is not prime")
        self.p = p
        self.zero = FpElt(p, 0)
        self.one = FpElt(p, 1)

    def of_int(self, n):
        return FpElt(self.p, n)

    def is_unit(self, x):
        return bool(x)

    def inv(self, x):
        if not x:
            raise ScalarError("division by zero")
        return FpElt(self.p, pow(x.v, self.p - 2, self.p))

    def div(self, a, b):
        return a * self.inv(b)

    def parse(self, obj):
        if isinstance(obj, int):
            return FpElt(self.p, obj)
        if isinstance(obj, str):
            return FpElt(self.p, int(obj))
        raise ScalarError(f"cannot parse prime-field element from {obj!r}")

    def dump(self, x):
        return x.v

    def describe(self):
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class HPol:
    """A polynomial in h over F_p, optionally reduced mod h^N.

    ``trunc=None`` means the exact polynomial ring; with ``trunc=N`` all
    coefficients of h^N and beyond are identically discarded after every
    operation.  Coefficient tuples never carry trailing zeros.
    """

    __slots__ = ("p", "trunc", "c")

    def __init__(self, p, coeffs, trunc=None):
        if trunc is not None:
            coeffs = coeffs[:trunc]
        n = len(coeffs)
        while n and coeffs[n - 1] % p == 0:
            n -= 1
        self.p = p
        self.trunc = trunc
        self.c = tuple(v % p for v in coeffs[:n])

    def _coerce(self, other):
        if isinstance(other, HPol):
            if other.p != self.p or other.trunc != self.trunc:
                raise ScalarError("mixed h-polynomial rings")
            return other.c
        if isinstance(other, int):
            return (other,)
        return NotImplemented

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return NotImplemented
        n = max(len(self.c), len(oc))
        a = list(self.c) + [0] * (n - len(self.c))
        for i, v in enumerate(oc):
            a[i] += v
        return HPol(self.p, a, self.trunc)

    __radd__ = __add__

    def __neg__(self):
        return HPol(self.p, [-v for v in self.c], self.trunc)

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return NotImplemented
        n = max(len(self.c), len(oc))
        a = list(self.c) + [0] * (n - len(self.c))
        for i, v in enumerate(oc):
            a[i] -= v
        return HPol(self.p, a, self.trunc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return NotImplemented
        if not self.c or not oc:
            return HPol(self.p, (), self.trunc)
        out = [0] * (len(self.c) + len(oc) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(oc):
                    if b:
                        out[i + j] += a * b
        return HPol(self.p, out, self.trunc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HPol):
            return self.p == other.p and self.trunc == other.trunc and self.c == other.c
        if isinstance(other, int):
            return self.c == ((other % self.p,) if other % self.p else ())
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.trunc, self.c))

    def __bool__(self):
        return bool(self.c)

    def ord_h(self):
        """Least index of a nonzero coefficient; raises on zero."""
        if not self.c:
            raise ScalarError("ord_h of zero is undefined")
        for i, v in enumerate(self.c):
            if v:
                return i
        raise AssertionError

    def shift_down(self, k=1):
        """Exact division by h^k; the k lowest coefficients must vanish."""
        if k == 0:
            return self
        if any(self.c[:k]):
            raise ScalarError("not divisible by h^%d" % k)
        return HPol(self.p, self.c[k:], self.trunc)

    def shift_up(self, k=1):
        return HPol(self.p, (0,) * k + self.c, self.trunc)

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i, v in enumerate(self.c):
            if v:
                terms.append("%d" % v if i == 0 else ("h" if i == 1 else f"h^{i}") + ("" if v == 1 else f"*{v}"))
        return "+".join(terms)


class HPolyRing:
    """F_p[h], exactly or truncated at h^N (``k[h]/(h^N)`` when N is set)."""

    kind = "hpoly"

    def __init__(self, p, trunc=None):
        if not _is_probable_prime(p):
            raise ScalarError(f"{p} is not prime")
        if trunc is not None and trunc < 1:
            raise ScalarError("truncation order must be >= 1")
        self.p = p
        self.trunc = trunc
        self.zero = HPol(p, (), trunc)
        self.one = HPol(p, (1,), trunc)
        self.h = HPol(p, (0, 1), trunc)

    def of_int(self, n):
        return HPol(self.p, (n,), self.trunc)

    def is_unit(self, x):
        return bool(x.c) and x.c[0] % self.p != 0

    def inv(self, x):
        """Inverse of a unit; needs a finite truncation to be well defined."""
        if not self.is_unit(x):
            raise ScalarError("not a unit in the h-polynomial ring")
        if self.trunc is None:
            if len(x.c) == 1:
                return HPol(self.p, (pow(x.c[0], self.p - 2, self.p),))
            raise ScalarError("non-constant polynomials are not invertible exactly")
        # power-series inversion mod h^N
        n = self.trunc
        c0inv = pow(x.c[0], self.p - 2, self.p)
        out = [c0inv] + [0] * (n - 1)
        for k in range(1, n):
            acc = 0
            for i in range(1, min(k, len(x.c) - 1) + 1):
                acc += x.c[i] * out[k - i]
            out[k] = (-acc * c0inv) % self.p
        return HPol(self.p, out, self.trunc)

    def div(self, a, b):
        return a * self.inv(b)

    def parse(self, obj):
        if isinstance(obj, int):
            return self.of_int(obj)
        if isinstance(obj, (list, tuple)):
            return HPol(self.p, [int(v) for v in obj], self.trunc)
        raise ScalarError(f"cannot parse h-polynomial from {obj!r}")

    def dump(self, x):
        return list(x.c)

    def to_trunc(self, x, n):
        return HPol(self.p, x.c, n)

    def to_exact(self, x):
        return HPol(self.p, x.c, None)

    def residue_field(self):
        return PrimeField(self.p)

    def residue(self, x):
        return FpElt(self.p, x.c[0] if x.c else 0)

    def describe(self):
        d = {"kind": "hpoly", "p": self.p}
        if self.trunc is not None:
            d["trunc"] = self.trunc
        return d

    def __eq__(self, other):
        return isinstance(other, HPolyRing) and (other.p, other.trunc) == (self.p, self.trunc)

    def __hash__(self):
        return hash(("hpoly", self.p, self.trunc))

    def __repr__(self):
        if self.trunc is None:
            return f"GF({self.p})[h]"
        return f"GF({self.p})[h]/(h^{self.trunc})"


def ring_from_description(d):
    kind = d.get("kind")
    if kind == "rational":
        return Rationals()
    if kind == "prime":
        return PrimeField(int(d["p"]))
    if kind == "hpoly":
        return HPolyRing(int(d["p"]), d.get("trunc"))
    raise ScalarError(f"unknown scalar kind {kind!r}")


QQ = Rationals()
