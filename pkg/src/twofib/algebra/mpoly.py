"""Multivariate polynomials over Q in a fixed, ordered symbol table.

The table holds every named invariant the intersection-ring computations
touch.  Three symbols (mu, mup, e) are *invertible*: they are the only ones
the source formulas ever divide by, so Laurent exponents are allowed for
them and for them only.  This gives a canonical normal form (equality is
dictionary equality) without general rational-function arithmetic.

Unknown symbol names are a construction-time error: the formulas are typed
in by hand and typos must not parse.
"""

from __future__ import annotations

from fractions import Fraction

SYMBOLS = (
    "c1", "c2", "c1p", "c2p",
    "tau", "taup", "Delta",
    "mu", "mup", "e",
    "iX", "iY", "d", "s",
    "a", "b", "g",
)
_INDEX = {name: i for i, name in enumerate(SYMBOLS)}
INVERTIBLE = frozenset({"mu", "mup", "e"})
_INVERTIBLE_IDX = frozenset(_INDEX[n] for n in INVERTIBLE)
_NVARS = len(SYMBOLS)
_ZERO_EXP = (0,) * _NVARS


def _check_exponents(exps):
    for i, k in enumerate(exps):
        if k < 0 and i not in _INVERTIBLE_IDX:
            raise ValueError(
                f"negative power of non-invertible symbol {SYMBOLS[i]!r}"
            )


class MPoly:
    """Immutable multivariate polynomial; ``terms`` maps exponent tuples to
    nonzero Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != _NVARS:
                raise ValueError("exponent vector has wrong arity")
            _check_exponents(exps)
            clean[exps] = coeff
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, q) -> "MPoly":
        q = Fraction(q)
        return cls({_ZERO_EXP: q} if q else {})

    @classmethod
    def sym(cls, name: str) -> "MPoly":
        return cls.monomial({name: 1})

    @classmethod
    def monomial(cls, powers: dict, coeff=1) -> "MPoly":
        exps = [0] * _NVARS
        for name, k in powers.items():
            if name not in _INDEX:
                raise ValueError(f"unknown symbol {name!r}")
            exps[_INDEX[name]] += k
        return cls({tuple(exps): Fraction(coeff)})

    @classmethod
    def inv(cls, name: str) -> "MPoly":
        """1/name for an invertible symbol."""
        return cls.monomial({name: -1})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ----------------------------------------------------------

    def degree_in(self, name: str) -> int:
        i = _INDEX[name]
        return max((e[i] for e in self.terms), default=0)

    def linear_in(self, name: str):
        """Split as A*name + B with A, B free of ``name``; errors if the
        polynomial has degree > 1 in ``name``."""
        i = _INDEX[name]
        a_terms, b_terms = {}, {}
        for e, c in self.terms.items():
            if e[i] == 0:
                b_terms[e] = c
            elif e[i] == 1:
                e0 = e[:i] + (0,) + e[i + 1 :]
                a_terms[e0] = c
            else:
                raise ValueError(f"not linear in {name}")
        return MPoly(a_terms), MPoly(b_terms)

    def exact_div_symbol(self, name: str, k: int = 1) -> "MPoly":
        """Divide by name**k; every term must carry at least exponent k
        unless the symbol is invertible."""
        i = _INDEX[name]
        out = {}
        for e, c in self.terms.items():
            e2 = e[:i] + (e[i] - k,) + e[i + 1 :]
            _check_exponents(e2)
            out[e2] = c
        return MPoly(out)

    def exact_div_const(self, q) -> "MPoly":
        q = Fraction(q)
        if q == 0:
            raise ZeroDivisionError
        return MPoly({e: c / q for e, c in self.terms.items()})

    def subs(self, mapping: dict) -> "MPoly":
        """Substitute symbols by values (Fraction/int) or MPoly expressions.

        Substituting into a negative exponent requires a nonzero scalar
        value (the invertible symbols only ever receive nonzero rationals).
        """
        vals = {}
        for name, v in mapping.items():
            if name not in _INDEX:
                raise ValueError(f"unknown symbol {name!r}")
            vals[_INDEX[name]] = v
        out = MPoly.const(0)
        for e, c in self.terms.items():
            term = MPoly.const(c)
            rest = [0] * _NVARS
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if i in vals:
                    v = vals[i]
                    if isinstance(v, MPoly):
                        if k < 0:
                            raise ValueError(
                                f"cannot substitute polynomial into 1/{SYMBOLS[i]}"
                            )
                        term = term * v**k
                    else:
                        v = Fraction(v)
                        if k < 0 and v == 0:
                            raise ZeroDivisionError(
                                f"zero substituted into 1/{SYMBOLS[i]}"
                            )
                        term = term * MPoly.const(v**k)
                else:
                    rest[i] += k
            out = out + term * MPoly({tuple(rest): Fraction(1)})
        return out

    def as_fraction(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if list(self.terms) != [_ZERO_EXP]:
            raise ValueError(f"not a constant: {self}")
        return self.terms[_ZERO_EXP]

    def free_of(self, name: str) -> bool:
        i = _INDEX[name]
        return all(e[i] == 0 for e in self.terms)

    # -- rendering ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            syms = []
            for i, k in enumerate(e):
                if k == 0:
                    continue
                syms.append(SYMBOLS[i] if k == 1 else f"{SYMBOLS[i]}^{k}")
            body = "*".join(syms)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    __repr__ = __str__


def _coerce(x) -> MPoly:
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to MPoly")
