"""Command-line surface.

Subcommands:
  classify --dim {2|3|5|all} [--json PATH] [--markdown PATH] [--bless]
  verify   --max-dim N
  tan-scan --max-m M

Exit codes: 0 success, 1 usage or I/O error, 2 verification failure.
Golden certificates live inside the package and are only rewritten under an
explicit --bless.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .certificate import (
    all_identities_pass,
    build_certificate,
    normalized_for_golden,
    parse_certificate,
    rat_from_json,
    ring_identity_suite,
    serialize_certificate,
)
from .tanfield import tan_sq_rational

GOLDEN_DIR = Path(__file__).parent / "golden"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="twofib")
    parser.add_argument(
        "--quiet", action="store_true", help="suppress informational output"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="run the case pipeline and certify the final tables"
    )
    p_classify.add_argument("--dim", required=True, help="2, 3, 5 or all")
    p_classify.add_argument("--json", dest="json_path", help="certificate output")
    p_classify.add_argument(
        "--markdown", dest="markdown_path", help="human-readable table output"
    )
    p_classify.add_argument(
        "--bless",
        action="store_true",
        help="rewrite the golden certificate instead of comparing against it",
    )

    p_verify = sub.add_parser(
        "verify", help="run the symbolic identity suite across dimensions"
    )
    p_verify.add_argument("--max-dim", type=int, required=True)

    p_tan = sub.add_parser(
        "tan-scan", help="exact rationality of tan^2(pi/m) over a range"
    )
    p_tan.add_argument("--max-m", type=int, required=True)
    return parser


def _say(args, text=""):
    if not args.quiet:
        print(text)


# -- classify ----------------------------------------------------------------


def _parse_dims(raw: str):
    if raw == "all":
        return [2, 3, 5], "all"
    try:
        n = int(raw)
    except ValueError:
        return None, raw
    if n in (2, 3, 5):
        return [n], f"dim{n}"
    return None, raw


def _fmt(q) -> str:
    if isinstance(q, dict):
        q = rat_from_json(q)
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _markdown_table(headers, rows) -> str:
    lines = [
        "| " + " | ".join(headers) + " |",
        "| " + " | ".join("---" for _ in headers) + " |",
    ]
    for row in rows:
        lines.append("| " + " | ".join(str(c) for c in row) + " |")
    return "\n".join(lines)


def render_markdown(cert: dict) -> str:
    out = ["# Classification certificate", ""]
    dims = sorted({t["n"] for t in cert["tuples"]})
    for n in dims:
        out.append(f"## Dimension {n}")
        out.append("")
        out.append("### Candidate tuples")
        out.append("")
        rows = [
            (
                t["iX"],
                t["mu"],
                t["e"],
                _fmt(t["tau"]),
                _fmt(t["delta"]),
                ", ".join(map(str, t["allowed_c1"])) or "-",
                "excluded" if t["excluded"] else "kept",
            )
            for t in cert["tuples"]
            if t["n"] == n
        ]
        out.append(
            _markdown_table(
                ("i_X", "mu", "e", "tau", "Delta", "c1 options", "status"), rows
            )
        )
        out.append("")
        pairs = [p for p in cert["pairs"] if p["n"] == n]
        if pairs:
            out.append("### Matched pairs")
            out.append("")
            out.append(
                _markdown_table(
                    ("i_X", "i_Y", "mu", "d_Y/d_X", "identification"),
                    [
                        (
                            p["left"]["iX"],
                            p["right"]["iX"],
                            p["mu_common"],
                            _fmt(p["degree_ratio"]),
                            " / ".join(p["names"]) if p["names"] else "-",
                        )
                        for p in pairs
                    ],
                )
            )
            out.append("")
        tables = [r for r in cert["tables"] if r["n"] == n]
        if tables:
            out.append("### Final invariants")
            out.append("")
            out.append(
                _markdown_table(
                    ("n", "i_X", "d", "mu", "tau", "Delta", "c1", "c2"),
                    [
                        (
                            r["n"],
                            r["iX"],
                            r["d"],
                            r["mu"],
                            _fmt(r["tau"]),
                            _fmt(r["delta"]),
                            r["c1"],
                            r["c2"],
                        )
                        for r in tables
                    ],
                )
            )
            out.append("")
    failing = [i for i in cert["identities"] if i["status"] != "pass"]
    out.append("### Identity checks")
    out.append("")
    out.append(
        f"{len(cert['identities']) - len(failing)} passed, {len(failing)} failed."
    )
    for rec in failing:
        out.append(f"- FAIL {rec['id']}: {rec['verbatim_quote']}")
    out.append("")
    return "\n".join(out)


def _golden_path(key: str) -> Path:
    return GOLDEN_DIR / f"classify_{key}.json"


def cmd_classify(args) -> int:
    dims, key = _parse_dims(args.dim)
    if dims is None:
        print(
            f"twofib classify: inadmissible dimension {key!r}; admissible: 2, 3, 5",
            file=sys.stderr,
        )
        return EXIT_USAGE
    try:
        cert = build_certificate(dims)
    except AssertionError as exc:
        print(f"twofib classify: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    ok = all_identities_pass(cert)

    for n in dims:
        tuples = [t for t in cert["tuples"] if t["n"] == n and not t["excluded"]]
        _say(args, f"dimension {n}: {len(tuples)} candidate tuple(s)")
        for t in tuples:
            _say(
                args,
                f"  (iX, mu, e) = ({t['iX']}, {t['mu']}, {t['e']})"
                f"  tau = {_fmt(t['tau'])}, Delta = {_fmt(t['delta'])},"
                f" c1 in {{{', '.join(map(str, t['allowed_c1']))}}}",
            )
        for p in (p for p in cert["pairs"] if p["n"] == n):
            names = " / ".join(p["names"]) if p["names"] else ""
            _say(
                args,
                f"  pair (iX, iY, mu) = ({p['left']['iX']}, {p['right']['iX']},"
                f" {p['mu_common']}), degree ratio {_fmt(p['degree_ratio'])}"
                f"  [{names}]",
            )
        for r in (r for r in cert["tables"] if r["n"] == n):
            _say(
                args,
                f"  final: (n, iX, d, mu, tau, Delta, c1, c2) = "
                f"({r['n']}, {r['iX']}, {r['d']}, {r['mu']}, {_fmt(r['tau'])},"
                f" {_fmt(r['delta'])}, {r['c1']}, {r['c2']})",
            )

    try:
        if args.json_path:
            Path(args.json_path).write_text(
                serialize_certificate(cert), encoding="utf-8"
            )
        if args.markdown_path:
            Path(args.markdown_path).write_text(
                render_markdown(cert), encoding="utf-8"
            )
    except OSError as exc:
        print(f"twofib classify: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE

    normalized = serialize_certificate(normalized_for_golden(cert))
    golden = _golden_path(key)
    if args.bless:
        try:
            golden.parent.mkdir(parents=True, exist_ok=True)
            golden.write_text(normalized, encoding="utf-8")
        except OSError as exc:
            print(f"twofib classify: cannot bless golden: {exc}", file=sys.stderr)
            return EXIT_USAGE
        _say(args, f"blessed {golden.name}")
        return EXIT_OK if ok else EXIT_VERIFY
    golden_ok = True
    if golden.exists():
        golden_ok = golden.read_text(encoding="utf-8") == normalized
        if not golden_ok:
            print(
                f"twofib classify: output deviates from golden {golden.name}",
                file=sys.stderr,
            )
    else:
        print(
            f"twofib classify: golden {golden.name} missing (run --bless)",
            file=sys.stderr,
        )
        golden_ok = False
    if not ok:
        print("twofib classify: identity failures recorded", file=sys.stderr)
    return EXIT_OK if ok and golden_ok else EXIT_VERIFY


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.max_dim < 2:
        print("twofib verify: --max-dim must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        records = ring_identity_suite(args.max_dim)
    except AssertionError as exc:
        print(f"twofib verify: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    ok = True
    for rec in records:
        ok &= rec["status"] == "pass"
        _say(args, f"{rec['status']:4s}  {rec['id']}: {rec['verbatim_quote']}")
    _say(
        args,
        f"{sum(r['status'] == 'pass' for r in records)}/{len(records)} identities pass",
    )
    return EXIT_OK if ok else EXIT_VERIFY


# -- tan-scan ----------------------------------------------------------------


def cmd_tan_scan(args) -> int:
    if args.max_m < 3:
        print("twofib tan-scan: --max-m must be >= 3", file=sys.stderr)
        return EXIT_USAGE
    admissible = []
    for m in range(3, args.max_m + 1):
        value = tan_sq_rational(m)
        if value is None:
            _say(args, f"m={m:<4d} tan^2(pi/{m}) irrational")
        else:
            _say(args, f"m={m:<4d} tan^2(pi/{m}) = {_fmt(value)}  rational")
            if m - 1 >= 2:
                admissible.append(m - 1)
    _say(args, f"admissible n: {', '.join(map(str, admissible))}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command == "classify":
        return cmd_classify(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "tan-scan":
        return cmd_tan_scan(args)
    parser.error("unknown command")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
