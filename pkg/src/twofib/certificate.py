"""Machine-readable certificates.

A certificate records everything the engine verified for a run: identity
checks with their formulas, the enumerated case tuples with full provenance,
matched pairs, consumed axioms, and the final invariant tables.  Rationals
serialize as {"num": "...", "den": "..."} string pairs -- never floating
point.  Serialization is canonical (sorted keys, fixed separators, UTF-8,
newline-terminated), so parse-then-serialize is byte-identical.
"""

from __future__ import annotations

import datetime
import json
from fractions import Fraction

from . import chowring
from .algebra import Rat
from .citations import AXIOMS, IDENTITIES
from .classifier import (
    CaseTuple,
    PairSolution,
    axioms_consumed,
    completeness_audit,
    enumerate_with_exclusions,
    attach_c1,
    final_table,
    pair_match,
    v_solver,
    l_dot_fprime,
    verify_base_change,
    verify_base_change_determinant,
)

SCHEMA_VERSION = "1"
NORMALIZED_TIMESTAMP = "1970-01-01T00:00:00Z"


def rat_to_json(q) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rat_from_json(obj) -> Rat:
    return Fraction(int(obj["num"]), int(obj["den"]))


def _identity_record(base_id: str, ok: bool, param: str = "") -> dict:
    meta = IDENTITIES[base_id]
    return {
        "id": base_id + (f"[{param}]" if param else ""),
        "cited_location": meta["description"],
        "verbatim_quote": meta["formula"],
        "status": "pass" if ok else "fail",
    }


def ring_identities_for(n: int) -> list:
    """The dimension-parameterized ring identities at one n."""

    def _safe(fn):
        try:
            return bool(fn())
        except AssertionError:
            return False

    return [
        _identity_record(
            "kpi-fiber-degree",
            _safe(lambda: chowring.kpi_fiber_degree(n) == -2),
            f"n={n}",
        ),
        _identity_record(
            "kpi-square", _safe(lambda: chowring.verify_kpi_square(n)), f"n={n}"
        ),
        _identity_record(
            "nef-vanishing-polynomial",
            _safe(lambda: chowring.verify_nef_power(n)),
            f"n={n}",
        ),
        _identity_record(
            "nef-vanishing-bruteforce",
            _safe(
                lambda: chowring.nef_power_polynomial(n)
                == chowring.nef_power_polynomial_bruteforce(n)
            ),
            f"n={n}",
        ),
        _identity_record(
            "imaginary-form",
            _safe(lambda: chowring.verify_imaginary_form(n)),
            f"n={n}",
        ),
    ]


def ring_identity_suite(max_dim: int) -> list:
    """Per-dimension ring identities for 2 <= n <= max_dim plus the
    dimension-independent symbolic ones."""
    if max_dim < 2:
        raise ValueError("max_dim >= 2 required")
    out = []
    for n in range(2, max_dim + 1):
        out.extend(ring_identities_for(n))
    out.extend(symbolic_identity_suite())
    return out


def symbolic_identity_suite() -> list:
    checks = [
        ("total-chern-product", chowring.verify_total_chern),
        ("ruled-surface-relation", chowring.verify_lemma_e),
        ("chern-class-reduced", chowring.verify_prop_c),
        ("discriminant-dual", chowring.verify_discriminant_dual),
        ("base-change-rows", verify_base_change),
        ("base-change-determinant", verify_base_change_determinant),
    ]
    out = []
    for base_id, fn in checks:
        try:
            ok = bool(fn())
        except AssertionError:
            ok = False
        out.append(_identity_record(base_id, ok))
    g_ok = True
    try:
        from .algebra import MPoly

        g_ok = chowring.solve_g() == (
            (MPoly.sym("b") - MPoly.sym("a"))
            * MPoly.monomial({"mu": -2, "e": -1})
        )
    except (AssertionError, ValueError):
        g_ok = False
    out.append(_identity_record("vanishing-coefficient", g_ok))
    return out


def _tuple_to_json(t: CaseTuple) -> dict:
    rec = {
        "n": t.n,
        "iX": t.iX,
        "mu": t.mu,
        "e": t.e,
        "tau": rat_to_json(t.tau),
        "upsilon": rat_to_json(t.upsilon),
        "delta": rat_to_json(t.delta),
        "allowed_c1": list(t.allowed_c1),
        "excluded": t.excluded,
        "provenance": [
            {"kind": r.kind, "ref": r.ref, "detail": r.detail}
            for r in t.provenance
        ],
    }
    if t.c1 is not None:
        rec["c1"] = t.c1
    if t.c2 is not None:
        rec["c2"] = rat_to_json(t.c2)
    if t.d is not None:
        rec["d"] = rat_to_json(t.d)
    if not t.excluded:
        rec["bezout_witnesses"] = [
            {
                "c1": c1,
                "l_fprime": l_dot_fprime(t, c1),
                "alpha": v_solver(t, c1)[0],
                "beta": v_solver(t, c1)[1],
            }
            for c1 in t.allowed_c1
        ]
    return rec


def _pair_to_json(p: PairSolution) -> dict:
    return {
        "n": p.n,
        "left": {"iX": p.left.iX, "mu": p.left.mu, "e": p.left.e, "c1": p.left.c1},
        "right": {
            "iX": p.right.iX,
            "mu": p.right.mu,
            "e": p.right.e,
            "c1": p.right.c1,
        },
        "mu_common": p.mu_common,
        "base_change": [[rat_to_json(x) for x in row] for row in p.base_change],
        "degree_ratio": rat_to_json(p.degree_ratio),
        "names": list(p.names) if p.names else None,
        "provenance": [
            {"kind": r.kind, "ref": r.ref, "detail": r.detail}
            for r in p.provenance
        ],
    }


def _row_to_json(row) -> dict:
    return {
        "n": row.n,
        "iX": row.iX,
        "d": row.d,
        "mu": row.mu,
        "tau": rat_to_json(row.tau),
        "delta": rat_to_json(row.delta),
        "c1": row.c1,
        "c2": row.c2,
    }


def _tuple_identities(ts: list) -> list:
    """Per-tuple identity records: dual-discriminant agreement and Bezout."""
    out = []
    for t in ts:
        if t.excluded:
            continue
        from .tanfield import tan_sq_rational

        t2 = tan_sq_rational(t.n + 1)
        agree = t.delta == -(t.tau**2) * t2 == t.tau**2 - 4 * t.tau / (t.e * t.mu)
        out.append(
            _identity_record(
                "dual-discriminant-agreement",
                bool(agree),
                f"n={t.n},iX={t.iX},mu={t.mu},e={t.e}",
            )
        )
        for c1 in t.allowed_c1:
            try:
                alpha, beta = v_solver(t, c1)
                ok = alpha * t.mu + beta * l_dot_fprime(t, c1) == 1
            except ValueError:
                ok = False
            out.append(
                _identity_record(
                    "bezout-witness",
                    ok,
                    f"n={t.n},iX={t.iX},mu={t.mu},e={t.e},c1={c1}",
                )
            )
    return out


def build_certificate(dims, generated_at: str | None = None) -> dict:
    """Run the full pipeline for the given dimensions and assemble the
    certificate dictionary."""
    if generated_at is None:
        generated_at = (
            datetime.datetime.now(datetime.timezone.utc)
            .replace(microsecond=0)
            .isoformat()
            .replace("+00:00", "Z")
        )
    identities = []
    tuples_json = []
    pairs_json = []
    tables_json = []
    axiom_ids = set()
    for n in sorted(dims):
        identities.extend(ring_identities_for(n))
    identities.extend(symbolic_identity_suite())
    for n in sorted(dims):
        survivors, flagged = enumerate_with_exclusions(n)
        for t in survivors:
            attach_c1(t)
        if not completeness_audit(n):
            raise AssertionError(f"completeness audit failed for n={n}")
        identities.extend(_tuple_identities(survivors))
        tuples_json.extend(_tuple_to_json(t) for t in survivors + flagged)
        pairs = pair_match(n)
        rows = final_table(n)
        identities.append(
            _identity_record(
                "degree-ratio",
                all(
                    p.degree_ratio
                    == Fraction(p.left.tau * p.mu_common) ** (n - 1)
                    / _tuple_kappa_root(n)
                    for p in pairs
                ),
                f"n={n}",
            )
        )
        pairs_json.extend(_pair_to_json(p) for p in pairs)
        tables_json.extend(_row_to_json(r) for r in rows)
        axiom_ids.update(axioms_consumed(n))
    axioms_json = [
        {
            "id": aid,
            "statement": AXIOMS[aid]["statement"],
            "citation": AXIOMS[aid]["citation"],
            "consumed_by": sorted(
                {
                    f"n={t['n']},iX={t['iX']},mu={t['mu']},e={t['e']}"
                    for t in tuples_json
                    if any(pr["ref"] == aid for pr in t["provenance"])
                }
            )
            or ["pipeline"],
        }
        for aid in sorted(axiom_ids)
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "generated_at": generated_at,
        "identities": identities,
        "tuples": tuples_json,
        "pairs": pairs_json,
        "axioms": axioms_json,
        "tables": tables_json,
    }


def _tuple_kappa_root(n: int) -> Rat:
    from .tanfield import kappa

    k = kappa(n) ** (n - 1)
    from math import isqrt

    rn, rd = isqrt(k.numerator), isqrt(k.denominator)
    assert rn * rn == k.numerator and rd * rd == k.denominator
    return Fraction(rn, rd)


def all_identities_pass(cert: dict) -> bool:
    return all(rec["status"] == "pass" for rec in cert["identities"])


def serialize_certificate(cert: dict) -> str:
    return (
        json.dumps(cert, sort_keys=True, ensure_ascii=False, separators=(",", ": "))
        + "\n"
    )


def parse_certificate(text: str) -> dict:
    return json.loads(text)


def normalized_for_golden(cert: dict) -> dict:
    """Certificate with the timestamp pinned, for golden comparison."""
    out = dict(cert)
    out["generated_at"] = NORMALIZED_TIMESTAMP
    return out
