"""Exact-arithmetic substrate tests: rationals, integer polynomials,
extended gcd, and Sturm machinery (both backends against each other and
against independent oracles)."""

import random
from fractions import Fraction
from math import gcd

import pytest

from twofib.algebra import (
    IntPoly,
    Rat,
    SturmChain,
    count_real_roots,
    exists_root_in_open,
    ext_gcd,
    isolate_smallest_positive_root,
    poly_gcd,
    rational_roots,
    smallest_positive_rational_root,
    square_free_part,
)
from twofib.algebra._sturmpure import SturmChain as PureChain


def frac(a, b=1):
    return Fraction(a, b)


# -- rationals ---------------------------------------------------------------


def test_rat_invariants_random_roundtrip():
    rng = random.Random(20240)
    for _ in range(300):
        x = frac(rng.randint(-999, 999), rng.randint(1, 999))
        y = frac(rng.randint(-999, 999), rng.randint(1, 999))
        assert (x + y) - y == x
        if y != 0:
            assert (x * y) / y == x
        # canonical form: reduced, positive denominator
        assert gcd(abs(x.numerator), x.denominator) == 1 or x.numerator == 0
        assert x.denominator > 0
    assert Rat(0).denominator == 1


# -- rational roots ----------------------------------------------------------


def test_rational_roots_linear():
    assert rational_roots(IntPoly([3, -1])) == {frac(3)}


def test_rational_roots_none():
    # candidates +-1, +-5 all fail by substitution
    p = IntPoly([5, -10, 1])
    for cand in (1, -1, 5, -5):
        assert p(cand) != 0
    assert rational_roots(p) == set()


def test_rational_roots_pair():
    # 6 - 20u + 6u^2 = 2(u-3)(3u-1), verified by substitution
    p = IntPoly([6, -20, 6])
    assert p(frac(3)) == 0 and p(frac(1, 3)) == 0
    assert rational_roots(p) == {frac(3), frac(1, 3)}


def test_rational_roots_zero_polynomial_errors():
    with pytest.raises(ValueError):
        rational_roots(IntPoly([]))


def test_rational_roots_exact_on_random_products():
    rng = random.Random(7)
    for _ in range(60):
        roots = set()
        p = IntPoly([rng.choice([1, 2, 3])])
        for _ in range(rng.randint(1, 4)):
            num = rng.randint(-9, 9)
            den = rng.randint(1, 6)
            g = gcd(abs(num), den) or 1
            num, den = num // g, den // g
            roots.add(frac(num, den))
            p = p * IntPoly([-num, den])
        found = rational_roots(p)
        assert roots <= found
        for r in found:
            assert p(r) == 0


# -- extended gcd ------------------------------------------------------------


@pytest.mark.parametrize("x,y,g", [(3, -2, 1), (4, -1, 1), (4, -2, 2)])
def test_ext_gcd_examples(x, y, g):
    got_g, a, b = ext_gcd(x, y)
    assert got_g == g > 0
    assert a * x + b * y == got_g


def test_ext_gcd_zero_pair_errors():
    with pytest.raises(ValueError):
        ext_gcd(0, 0)


def test_ext_gcd_random_bezout():
    rng = random.Random(99)
    for _ in range(500):
        x, y = rng.randint(-10**9, 10**9), rng.randint(-10**9, 10**9)
        if x == 0 and y == 0:
            continue
        g, a, b = ext_gcd(x, y)
        assert g == gcd(x, y) > 0
        assert a * x + b * y == g


# -- Sturm chains ------------------------------------------------------------


def _poly_with_rational_roots(rng, nroots, extra_quadratic=False):
    """Product of distinct rational linear factors (exact known roots)."""
    roots = set()
    while len(roots) < nroots:
        num = rng.randint(-40, 40)
        den = rng.randint(1, 8)
        g = gcd(abs(num), den) or 1
        roots.add(frac(num // g, den // g))
    p = IntPoly([1])
    for r in roots:
        p = p * IntPoly([-r.numerator, r.denominator])
    if extra_quadratic:
        c = rng.randint(1, 9)
        p = p * IntPoly([c, 0, 1])  # no real roots
    return p, sorted(roots)


def _grid_scan_count(p, roots):
    """Brute-force sign-change scan on a rational grid finer than the root
    separation; exact arithmetic throughout."""
    lo = min(roots) - 1
    hi = max(roots) + 1
    sep = min((b - a for a, b in zip(roots, roots[1:])), default=frac(1))
    step = sep / 3
    # offset keeps grid nodes off the roots; must stay inside the 1-margin
    x = lo + min(step, 1) / 7
    signs = []
    while x < hi + step:
        v = p(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
        x += step
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def test_sturm_count_vs_grid_scan_200_random():
    rng = random.Random(4242)
    for _ in range(200):
        p, roots = _poly_with_rational_roots(
            rng, rng.randint(1, 6), extra_quadratic=rng.random() < 0.3
        )
        assert p.degree <= 8 or True
        n_sturm = count_real_roots(p)
        assert n_sturm == len(roots)
        assert _grid_scan_count(p, roots) == len(roots)


def test_sturm_counts_distinct_roots_with_multiplicity():
    # (x-1)^2 (x+2): two distinct real roots
    p = IntPoly([-1, 1]) * IntPoly([-1, 1]) * IntPoly([2, 1])
    assert count_real_roots(p) == 2


def test_sturm_halfopen_convention():
    p = IntPoly([6, -20, 6])  # roots 1/3, 3
    assert count_real_roots(p, frac(0), frac(1, 3)) == 1  # includes 1/3
    assert count_real_roots(p, frac(1, 3), frac(3)) == 1  # includes 3 only
    assert count_real_roots(p, frac(0), frac(1, 4)) == 0


def test_backends_agree_on_random_inputs():
    rng = random.Random(31337)
    for _ in range(120):
        deg = rng.randint(1, 9)
        coeffs = [rng.randint(-50, 50) for _ in range(deg)] + [
            rng.choice([-3, -1, 1, 2, 7])
        ]
        fast = SturmChain(coeffs)
        pure = PureChain(coeffs)
        assert fast.coefficient_rows() == pure.coefficient_rows()
        for _ in range(4):
            num = rng.randint(-60, 60)
            den = rng.randint(1, 12)
            assert fast.variations_at(num, den) == pure.variations_at(num, den)
        assert fast.variations_pos_inf() == pure.variations_pos_inf()
        assert fast.variations_neg_inf() == pure.variations_neg_inf()


def test_pure_chain_matches_textbook_fraction_chain():
    """The signed subresultant chain must produce the same sign sequences as
    the naive Sturm chain computed over Q."""

    def textbook_signs(coeffs, x):
        def norm(cs):
            cs = [Fraction(c) for c in cs]
            while cs and cs[-1] == 0:
                cs.pop()
            return cs

        def rem(a, b):
            a = a[:]
            while len(a) >= len(b) and a:
                f = a[-1] / b[-1]
                k = len(a) - len(b)
                for i, c in enumerate(b):
                    a[k + i] -= f * c
                a.pop()
                while a and a[-1] == 0:
                    a.pop()
            return a

        chain = [norm(coeffs)]
        d = [i * c for i, c in enumerate(chain[0])][1:]
        chain.append(norm(d))
        while chain[-1]:
            r = rem(chain[-2], chain[-1])
            if not r:
                break
            chain.append([-c for c in r])
        def ev(cs):
            acc = Fraction(0)
            for c in reversed(cs):
                acc = acc * x + c
            return (acc > 0) - (acc < 0)
        return [ev(cs) for cs in chain if cs]

    rng = random.Random(555)
    for _ in range(80):
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-20, 20) for _ in range(deg)] + [rng.choice([1, -2, 5])]
        chain = PureChain(coeffs)
        for _ in range(3):
            x = frac(rng.randint(-30, 30), rng.randint(1, 9))
            expected = textbook_signs(coeffs, x)
            got = [
                e * IntPoly(list(p)).sign_at(x.numerator, x.denominator)
                for p, e in chain.coefficient_rows()
            ]
            def vars_(signs):
                signs = [s for s in signs if s]
                return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
            assert vars_(got) == vars_(expected)


# -- smallest positive root isolation ----------------------------------------


def test_isolate_trivial_root_one():
    # 4t - 4t^3 restricted to t > 0: root at 1
    lo, hi = isolate_smallest_positive_root(IntPoly([0, 4, 0, -4]))
    assert lo < 1 <= hi


def test_isolate_smaller_of_two_rational_roots():
    lo, hi = isolate_smallest_positive_root(IntPoly([6, -20, 6]))
    assert lo < frac(1, 3) <= hi
    assert not (lo < 3 <= hi)


def test_isolate_irrational_root_quadratic_oracle():
    # 5 - 10u + u^2 has roots 5 +- 2*sqrt(5); smallest is 5 - 2*sqrt(5).
    # Membership oracle: x = 5 - 2 sqrt 5 lies in (lo, hi) iff
    # (5 - hi)^2 < 20 < (5 - lo)^2 for endpoints below 5.
    lo, hi = isolate_smallest_positive_root(IntPoly([5, -10, 1]))
    assert lo < hi < 5
    assert (5 - hi) ** 2 < 20 < (5 - lo) ** 2


def test_isolate_errors_without_positive_root():
    with pytest.raises(ValueError):
        isolate_smallest_positive_root(IntPoly([1, 0, 1]))  # 1 + u^2
    with pytest.raises(ValueError):
        isolate_smallest_positive_root(IntPoly([]))


def test_isolated_interval_contains_exactly_one_root():
    rng = random.Random(2718)
    for _ in range(40):
        p, roots = _poly_with_rational_roots(rng, rng.randint(1, 5))
        positive = sorted(r for r in roots if r > 0)
        if not positive:
            with pytest.raises(ValueError):
                isolate_smallest_positive_root(p)
            continue
        lo, hi = isolate_smallest_positive_root(p)
        assert count_real_roots(p, lo, hi) == 1
        assert lo < positive[0] <= hi


# -- helpers around roots ------------------------------------------------------


def test_exists_root_in_open_handles_endpoint_roots():
    p = IntPoly([6, -20, 6])  # roots 1/3 and 3
    assert not exists_root_in_open(p, frac(0), frac(1, 3))
    assert exists_root_in_open(p, frac(0), frac(1))
    assert exists_root_in_open(p, frac(1, 3), frac(4))
    assert not exists_root_in_open(p, frac(1, 3), frac(3))


def test_smallest_positive_rational_root():
    assert smallest_positive_rational_root(IntPoly([6, -20, 6])) == frac(1, 3)
    assert smallest_positive_rational_root(IntPoly([5, -10, 1])) is None


def test_square_free_part_and_poly_gcd():
    p = IntPoly([-1, 1]) ** 2 if hasattr(IntPoly, "__pow__") else None
    a = IntPoly([-1, 1])
    sq = a * a * IntPoly([2, 1])
    part = square_free_part(sq)
    assert part == a * IntPoly([2, 1]) or part == (a * IntPoly([2, 1])).primitive()
    g = poly_gcd(sq, sq.derivative())
    assert g.degree == 1
    assert rational_roots(g) == {frac(1)}


def test_intpoly_eval_homogeneous_sign():
    p = IntPoly([6, -20, 6])
    assert p.sign_at(1, 3) == 0
    assert p.sign_at(1, 2) < 0  # between the roots
    assert p.sign_at(4, 1) > 0
