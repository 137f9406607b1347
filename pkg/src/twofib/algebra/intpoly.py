"""Univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored in ascending degree with a nonzero leading
coefficient (the zero polynomial is the empty tuple).  Everything here is
exact: evaluation at rationals clears denominators, root finding uses the
rational root theorem with substitution checks, and all divisions verify
their remainders.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


class IntPoly:
    """Immutable integer polynomial, coefficients ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {c!r}")
        self.coeffs = tuple(cs)

    # -- basics ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift_up(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return IntPoly([0] * k + list(self.coeffs))

    # -- evaluation ------------------------------------------------------

    def __call__(self, x):
        """Exact evaluation; accepts int or Fraction."""
        if isinstance(x, Fraction) and x.denominator != 1:
            num = self.eval_homogeneous(x.numerator, x.denominator)
            return Fraction(num, x.denominator ** max(self.degree, 0))
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_homogeneous(self, num: int, den: int) -> int:
        """den**degree * p(num/den), an integer whose sign is sign(p(num/den))
        when den > 0."""
        if self.is_zero():
            return 0
        acc = 0
        pw = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * pw
            pw *= den
        # pw overshoots by one factor of den in the loop above
        return acc

    def sign_at(self, num: int, den: int) -> int:
        v = self.eval_homogeneous(num, den)
        return (v > 0) - (v < 0)

    # -- content and division ---------------------------------------------

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with the leading coefficient's sign preserved."""
        if self.is_zero():
            return self
        g = self.content()
        return IntPoly([c // g for c in self.coeffs])

    def divmod_exactish(self, other: "IntPoly"):
        """Pseudo-free division over Q, returned as exact Fractions cleared:
        returns (q, r) with self = q*other + r in Z[x] when the division is
        exact over Z, else raises ValueError.  Used for certified factor
        splits where the remainder must vanish."""
        q, r = poly_divmod_q(self, other)
        qz = fractions_to_intpoly(q)
        rz = fractions_to_intpoly(r)
        if qz is None or rz is None:
            raise ValueError("division not exact over the integers")
        return qz, rz

    def deflate_root(self, num: int, den: int) -> "IntPoly":
        """Divide out (den*x - num) once; requires p(num/den) = 0 exactly."""
        d = self.degree
        if d < 1 or self.sign_at(num, den) != 0:
            raise ValueError("not a root")
        root = Fraction(num, den)
        coeffs = list(self.coeffs)
        quot = [Fraction(0)] * d
        acc = Fraction(coeffs[d])
        for i in range(d - 1, -1, -1):
            quot[i] = acc
            acc = acc * root + coeffs[i]
        res = fractions_to_intpoly(quot)
        if res is not None:
            return res
        # denominators remain: scale by den, which restores integrality
        res = fractions_to_intpoly([c * den for c in quot])
        if res is None:
            raise ValueError("deflation produced non-integer coefficients")
        return res

    def cauchy_bound(self) -> Fraction:
        """Strict upper bound on the absolute value of all real roots."""
        if self.degree < 1:
            raise ValueError("bound undefined for constants")
        lead = abs(self.leading())
        m = max(abs(c) for c in self.coeffs[:-1]) if self.degree > 0 else 0
        return 1 + Fraction(m, lead)


def fractions_to_intpoly(coeffs):
    """IntPoly from Fraction coefficients when all are integral, else None."""
    out = []
    for c in coeffs:
        c = Fraction(c)
        if c.denominator != 1:
            return None
        out.append(c.numerator)
    return IntPoly(out)


def poly_divmod_q(a: IntPoly, b: IntPoly):
    """Division with remainder over Q; returns coefficient lists of Fractions."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a.coeffs]
    q = [Fraction(0)] * max(len(r) - len(b.coeffs) + 1, 1)
    db = b.degree
    lb = Fraction(b.leading())
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        f = r[-1] / lb
        q[k] = f
        for i, c in enumerate(b.coeffs):
            r[k + i] -= f * c
        r.pop()
    return q, r


def divisors(n: int):
    """Positive divisors of |n|, unordered."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no finite divisor set")
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return out


def rational_roots(p: IntPoly) -> set:
    """All rational roots of ``p``, exactly.

    Candidates come from the rational root theorem; membership is decided by
    exact substitution, never numerically.
    """
    if p.is_zero():
        raise ValueError("indeterminate roots: zero polynomial")
    coeffs = list(p.coeffs)
    # strip x^k factors: they contribute the root 0
    roots = set()
    k = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        k += 1
    if k:
        roots.add(Fraction(0))
    q = IntPoly(coeffs)
    if q.degree < 1:
        return roots
    a0, an = coeffs[0], coeffs[-1]
    seen = set()
    for pnum in divisors(a0):
        for pden in divisors(an):
            g = gcd(pnum, pden)
            cand = (pnum // g, pden // g)
            if cand in seen:
                continue
            seen.add(cand)
            for s in (1, -1):
                if q.sign_at(s * cand[0], cand[1]) == 0:
                    roots.add(Fraction(s * cand[0], cand[1]))
    return roots


def ext_gcd(x: int, y: int):
    """Classical extended Euclid: returns (g, alpha, beta) with
    alpha*x + beta*y = g = gcd(x, y) > 0."""
    if x == 0 and y == 0:
        raise ValueError("gcd(0, 0) undefined")
    old_r, r = x, y
    old_a, a = 1, 0
    old_b, b = 0, 1
    while r != 0:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_a, a = a, old_a - qt * a
        old_b, b = b, old_b - qt * b
    if old_r < 0:
        old_r, old_a, old_b = -old_r, -old_a, -old_b
    return old_r, old_a, old_b


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in Z[x] (positive leading coefficient)."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        f, s = (a, b) if a.degree >= b.degree else (b, a)
        f, s = f.primitive(), s.primitive()
        while not s.is_zero() and s.degree > 0:
            _, r = poly_divmod_q(f, s)
            lcm_den = 1
            for c in r:
                lcm_den = lcm_den * c.denominator // gcd(lcm_den, c.denominator)
            rz = IntPoly([int(c * lcm_den) for c in r])
            f, s = s, rz.primitive() if not rz.is_zero() else rz
        if not s.is_zero():
            g = IntPoly([1])
        else:
            g = f.primitive()
        ca, cb = a.content(), b.content()
        g = g * gcd(ca, cb) if g.degree >= 0 else g
    if g.leading() < 0:
        g = -g
    return g


def square_free_part(p: IntPoly) -> IntPoly:
    """p divided by gcd(p, p'), primitive, leading sign preserved."""
    if p.is_zero():
        raise ValueError("square-free part of zero undefined")
    if p.degree <= 1:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    q, r = p.divmod_exactish(g)
    if not r.is_zero():
        raise AssertionError("gcd does not divide its polynomial")
    return q.primitive()
