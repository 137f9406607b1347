"""Pure-Python Sturm chain kernel.

The chain is a subresultant pseudo-remainder sequence: every element is an
integer polynomial equal to a *rational rescaling* of the corresponding
element of the textbook Sturm sequence (built from remainders over Q).  The
sign of each rescaling factor is tracked in ``eps``, so that

    eps[i] * sign(P_i(x))  ==  sign(S_i(x))

for the true Sturm chain S.  Sign-variation counts therefore agree with the
textbook chain while all arithmetic stays in Z with subresultant-bounded
coefficient growth (no content gcds on the hot path).

Divisions by the Collins factors are checked: an inexact division raises
instead of silently corrupting the chain.

This module is the fallback implementation; twofib.algebra._sturmcore is the
compiled GMP version with the same interface.
"""

from __future__ import annotations

BACKEND = "pure"


def _strip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _prem(f, g):
    """Pseudo-remainder lc(g)^(df-dg+1) * f mod g; ascending coefficients."""
    df, dg = len(f) - 1, len(g) - 1
    r = list(f)
    dr = df
    lc_g = g[-1]
    n = df - dg + 1
    while dr >= dg:
        lc_r = r[dr]
        n -= 1
        for i in range(dr):
            r[i] *= lc_g
        j = dr - dg
        for i in range(dg):
            r[j + i] -= lc_r * g[i]
        del r[dr:]
        r = _strip(r)
        dr = len(r) - 1
        if dr < 0:
            break
    if n > 0 and r:
        m = lc_g**n
        r = [c * m for c in r]
    return r


def _exact_div(c, b):
    q, rem = divmod(c, b)
    if rem:
        raise ArithmeticError("inexact subresultant division")
    return q


def _sign(x):
    return (x > 0) - (x < 0)


class SturmChain:
    """Signed subresultant Sturm chain of (p, p')."""

    __slots__ = ("polys", "eps", "degree")

    def __init__(self, coeffs):
        p0 = _strip(int(c) for c in coeffs)
        self.degree = len(p0) - 1
        self.polys = []
        self.eps = []
        if not p0:
            return
        self._push(p0, 1)
        if len(p0) == 1:
            return
        p1 = _strip(i * c for i, c in enumerate(p0) if i > 0)
        self._push(p1, 1)
        g, h = 1, 1
        eps_prev, eps_cur = 1, 1
        a, b = p0, p1
        while len(b) > 1:
            delta = (len(a) - 1) - (len(b) - 1)
            r = _prem(a, b)
            if not r:
                break
            beta = (-1) ** (delta + 1) * g * h**delta
            r = [_exact_div(c, beta) for c in r]
            lc_b = b[-1]
            eps_next = -eps_prev * _sign(lc_b) ** (delta + 1) * _sign(beta)
            self._push(r, eps_next)
            g = lc_b
            if delta == 1:
                h = g
            else:
                h = _exact_div(g**delta, h ** (delta - 1))
            a, b = b, r
            eps_prev, eps_cur = eps_cur, eps_next

    def _push(self, poly, eps):
        self.polys.append(tuple(poly))
        self.eps.append(eps)

    def __len__(self):
        return len(self.polys)

    def coefficient_rows(self):
        """Chain contents for debugging/cross-checks: list of (coeffs, eps)."""
        return list(zip(self.polys, self.eps))

    # -- sign variation queries -----------------------------------------

    def variations_at(self, num, den):
        """Sign variations of the (virtual) true Sturm chain at num/den, den > 0."""
        signs = []
        for poly, e in zip(self.polys, self.eps):
            acc = 0
            pw = 1
            for c in reversed(poly):
                acc = acc * num + c * pw
                pw *= den
            signs.append(e * _sign(acc))
        return _count_variations(signs)

    def variations_pos_inf(self):
        signs = [e * _sign(p[-1]) for p, e in zip(self.polys, self.eps)]
        return _count_variations(signs)

    def variations_neg_inf(self):
        signs = [
            e * _sign(p[-1]) * (-1) ** (len(p) - 1)
            for p, e in zip(self.polys, self.eps)
        ]
        return _count_variations(signs)


def _count_variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)
