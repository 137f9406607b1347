"""Tangent multiple-angle polynomials and exact rationality of tan^2(pi/m).

Writing (1 + i*t)^m = R_m(t) + i*P_m(t), the odd polynomial P_m vanishes at
t = tan(k*pi/m), so Q_m defined by P_m(t) = t * Q_m(t^2) has the root set
{tan^2(k*pi/m) : 1 <= k <= floor((m-1)/2)}.  The smallest positive root is
tan^2(pi/m); that identification is the one analytic fact used here (tan^2
is strictly increasing on (0, pi/2)) and it is only used to *name* the root,
never to count anything.

Counting is mechanical: tan^2(pi/m) is rational iff the smallest positive
rational root r0 of Q_m has no root of Q_m below it, decided by exact Sturm
counts.  To keep large scans fast, Q_m is split along divisors of m: for
m' | m the primitive part of Q_{m'} divides the primitive part of Q_m (their
root sets are nested), which the code *certifies* at runtime by an exact
polynomial division with zero remainder, falling back to the unsplit
polynomial if the certificate ever failed.  Root-set unions make the
decision sound without any squarefreeness assumption.

The rationality decision subsumes the classical algebraic-degree theorem for
tan(pi/m) within any finite scan range: no such result is assumed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from .algebra import (
    IntPoly,
    Rat,
    exists_root_in_open,
    isolate_smallest_positive_root,
    rational_roots,
)


@dataclass(frozen=True)
class TangentPolyResult:
    """P_m, Q_m and, when rational, the exact value of tan^2(pi/m)."""

    m: int
    p: IntPoly
    q: IntPoly
    tan_sq: Optional[Rat] = None
    isolating_interval: Optional[tuple] = None


def tangent_pair_expansion(m: int):
    """(R_m, P_m) by direct binomial expansion of (1+it)^m."""
    r = [0] * (m + 1)
    p = [0] * (m + 1)
    for k in range(m + 1):
        c = comb(m, k)
        if k % 2 == 0:
            r[k] = c * (-1) ** (k // 2)
        else:
            p[k] = c * (-1) ** ((k - 1) // 2)
    return IntPoly(r), IntPoly(p)


_RECURRENCE_CACHE = {1: (IntPoly([1]), IntPoly([0, 1]))}


def tangent_pair_recurrence(m: int):
    """(R_m, P_m) via R_{m+1} = R_m - t*P_m, P_{m+1} = P_m + t*R_m.

    Multiplication by t is a coefficient shift, so each step is additions
    only; the cache makes ascending scans amortized linear per m.
    """
    if m < 1:
        raise ValueError("m >= 1 required")
    top = max(_RECURRENCE_CACHE)
    if m > top:
        r, p = _RECURRENCE_CACHE[top]
        for k in range(top + 1, m + 1):
            r, p = r - p.shift_up(1), p + r.shift_up(1)
            _RECURRENCE_CACHE[k] = (r, p)
    return _RECURRENCE_CACHE[m]


@lru_cache(maxsize=None)
def tangent_poly(m: int) -> TangentPolyResult:
    """P_m and Q_m with the two construction routes cross-checked."""
    if m < 3:
        raise ValueError("m >= 3 required")
    r_exp, p_exp = tangent_pair_expansion(m)
    r_rec, p_rec = tangent_pair_recurrence(m)
    if (r_exp, p_exp) != (r_rec, p_rec):
        raise AssertionError("tangent polynomial recurrence disagrees with expansion")
    cs = p_exp.coeffs
    if any(cs[k] != 0 for k in range(0, len(cs), 2)):
        raise AssertionError("P_m is not odd")
    q = IntPoly([cs[k] for k in range(1, len(cs), 2)])
    return TangentPolyResult(m=m, p=p_exp, q=q)


def _largest_proper_divisor_ge3(m: int) -> Optional[int]:
    for p in range(2, m):
        if p * p > m:
            break
        if m % p == 0:
            if m // p >= 3:
                return m // p
            break
    return None


@lru_cache(maxsize=None)
def _split_factors(m: int):
    """Integer factors whose root-set union equals the roots of Q_m.

    Splitting is certified: the divisor polynomial must divide exactly, else
    the unsplit polynomial is used.  Recursion follows the largest proper
    divisor, so factor degrees shrink geometrically.
    """
    q = tangent_poly(m).q.primitive()
    mp = _largest_proper_divisor_ge3(m)
    if mp is None:
        return (q,)
    base = tangent_poly(mp).q.primitive()
    try:
        c, rem = q.divmod_exactish(base)
        if not rem.is_zero():
            return (q,)
    except ValueError:
        return (q,)
    return _split_factors(mp) + (c,)


def tan_sq_rational(m: int) -> Optional[Rat]:
    """Exact value of tan^2(pi/m) when rational, else None.

    Rational candidates are the positive rational roots of Q_m; the smallest
    candidate r0 is the answer iff no root of Q_m lies in (0, r0), a Sturm
    existence decision on the certified factors.
    """
    q = tangent_poly(m).q
    candidates = [r for r in rational_roots(q) if r > 0]
    if not candidates:
        return None
    r0 = min(candidates)
    for factor in _split_factors(m):
        if exists_root_in_open(factor, Fraction(0), r0):
            return None
    return r0


def analyze_tangent(m: int) -> TangentPolyResult:
    """tangent_poly(m) with tan_sq and an isolating interval populated."""
    base = tangent_poly(m)
    value = tan_sq_rational(m)
    if value is None:
        return base
    lo, hi = isolate_smallest_positive_root(base.q)
    if not lo < value <= hi:
        raise AssertionError("rational root escaped its isolating interval")
    return TangentPolyResult(
        m=m, p=base.p, q=base.q, tan_sq=value, isolating_interval=(lo, hi)
    )


def admissible_dims(max_n: int) -> set:
    """Dimensions n in [2, max_n] where tan^2(pi/(n+1)) is rational."""
    if max_n < 2:
        raise ValueError("max_n >= 2 required")
    return {n for n in range(2, max_n + 1) if tan_sq_rational(n + 1) is not None}


def kappa(n: int) -> Rat:
    """The exact constant 4*cos^2(pi/(n+1)) = 4 / (1 + tan^2(pi/(n+1))).

    Defined exactly when tan^2(pi/(n+1)) is rational; this is the product
    tau*mu*e that the discriminant comparison pins down.
    """
    t = tan_sq_rational(n + 1)
    if t is None:
        raise ValueError(f"irrational constraint: tan^2(pi/{n + 1}) is not rational")
    return 4 / (1 + t)
