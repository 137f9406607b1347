"""Exact real-root counting and isolation built on Sturm chains.

The chain kernel has two interchangeable implementations: a compiled
GMP-backed extension and a pure-Python fallback.  The compiled one is
selected at import when available; set TWOFIB_PURE=1 to force the fallback
(used by the benchmark to compare both).

Counting convention: ``count_real_roots(p, a, b)`` returns the number of
*distinct* real roots in the half-open interval (a, b], with ``None``
endpoints meaning -/+ infinity.  All queries are exact; no floating point
participates in any decision.
"""

from __future__ import annotations

import os
from fractions import Fraction

from . import _sturmpure
from .intpoly import IntPoly, rational_roots

if os.environ.get("TWOFIB_PURE") == "1":
    _impl = _sturmpure
else:
    try:
        from . import _sturmcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _sturmpure

SturmChain = _impl.SturmChain
BACKEND = _impl.BACKEND

WIDTH_CAP = Fraction(1, 10**12)


def chain_for(p: IntPoly) -> "SturmChain":
    return SturmChain(p.coeffs)


def _variations(chain, x):
    if x is None:
        raise ValueError("endpoint required")
    x = Fraction(x)
    return chain.variations_at(x.numerator, x.denominator)


def count_real_roots(p, a=None, b=None) -> int:
    """Distinct real roots of ``p`` in (a, b]."""
    chain = chain_for(p) if isinstance(p, IntPoly) else p
    va = chain.variations_neg_inf() if a is None else _variations(chain, a)
    vb = chain.variations_pos_inf() if b is None else _variations(chain, b)
    return va - vb


def exists_root_in_open(p: IntPoly, a, b) -> bool:
    """True iff ``p`` has a real root strictly between a and b.

    Endpoint roots are divided out first, so the decision is exact even when
    a or b is itself a (possibly multiple) root.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("empty interval")
    q = p
    while q.degree >= 1 and q.sign_at(a.numerator, a.denominator) == 0:
        q = q.deflate_root(a.numerator, a.denominator)
    while q.degree >= 1 and q.sign_at(b.numerator, b.denominator) == 0:
        q = q.deflate_root(b.numerator, b.denominator)
    if q.degree < 1:
        return False
    return count_real_roots(q, a, b) >= 1


def _positive_candidates(p: IntPoly):
    """Positive rational-root-theorem candidates of the zero-stripped part."""
    from .intpoly import divisors

    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return set()
    cands = set()
    for pn in divisors(coeffs[0]):
        for pd in divisors(coeffs[-1]):
            cands.add(Fraction(pn, pd))
    return cands


def isolate_smallest_positive_root(p: IntPoly, width_cap: Fraction = WIDTH_CAP):
    """Isolating interval (lo, hi] for the smallest positive real root.

    The interval contains exactly one root of ``p``.  Bisection continues
    until every rational-root candidate other than the isolated root itself
    is excluded, or until the width drops under ``width_cap`` (a fallback,
    not a correctness criterion: membership of a rational point is always
    decided by exact substitution).
    """
    if p.is_zero():
        raise ValueError("indeterminate roots: zero polynomial")
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    q = IntPoly(coeffs)
    if q.degree < 1:
        raise ValueError("no positive real root")
    from .intpoly import square_free_part

    q = square_free_part(q)
    chain = chain_for(q)
    lo = Fraction(0)
    hi = q.cauchy_bound()
    total = count_real_roots(chain, lo, hi)
    if total < 1:
        raise ValueError("no positive real root")
    cands = _positive_candidates(q)

    def inside(x):
        return lo < x <= hi

    while True:
        n_here = count_real_roots(chain, lo, hi)
        if n_here == 1:
            blockers = [c for c in cands if inside(c)]
            if not blockers:
                break
            if len(blockers) == 1 and q.sign_at(
                blockers[0].numerator, blockers[0].denominator
            ) == 0:
                break
        if hi - lo < width_cap:
            break
        mid = (lo + hi) / 2
        if count_real_roots(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def smallest_positive_rational_root(p: IntPoly):
    """The smallest positive rational root, or None."""
    pos = [r for r in rational_roots(p) if r > 0]
    return min(pos) if pos else None
