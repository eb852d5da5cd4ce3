"""Command-line front end.

Subcommands: report, whitney, check, dot, iso, verify-paper.

Exit codes: 0 success (and "property holds" / "isomorphic"), 1 property fails
or posets are not isomorphic or a verification row fails, 2 usage or parse
errors, 3 evaluation errors (bad files, cyclic input, non-graded posets where
a grading is required).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, core, dsl

PROPERTY_CHOICES = {
    "symmetric": "rank_symmetric",
    "unimodal": "rank_unimodal",
    "logconcave": "rank_log_concave",
    "normal": "normal",
    "sperner": "strongly_sperner",
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": [
        "expression",
        "elements",
        "graded",
        "max_rank",
        "whitney",
        "rank_polynomial",
        "properties",
    ],
    "additionalProperties": False,
    "properties": {
        "expression": {"type": "string"},
        "elements": {"type": "integer", "minimum": 0},
        "graded": {"type": "boolean"},
        "max_rank": {"type": ["integer", "null"]},
        "whitney": {
            "type": ["array", "null"],
            "items": {"type": "integer", "minimum": 0},
        },
        "rank_polynomial": {"type": ["string", "null"]},
        "properties": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["holds", "witness"],
                "additionalProperties": False,
                "properties": {
                    "holds": {"type": ["boolean", "null"]},
                    "witness": {"type": ["object", "null"]},
                },
            },
        },
    },
}


def polynomial_string(counts) -> str:
    """Human form of a rank polynomial, e.g. (1, 2, 1) -> '1 + 2q + q^2'."""
    parts = []
    for i, c in enumerate(counts):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        base = "q" if i == 1 else f"q^{i}"
        parts.append(base if c == 1 else f"{c}{base}")
    return " + ".join(parts) if parts else "0"


def report_dict(expression: str, p: core.Poset) -> dict:
    """The JSON-ready report body; REPORT_SCHEMA describes its shape."""
    rep = analysis.property_report(p)
    if p.graded:
        counts = list(analysis.rank_polynomial(p))
        body = {
            "expression": expression,
            "elements": p.n,
            "graded": True,
            "max_rank": p.max_rank,
            "whitney": counts,
            "rank_polynomial": polynomial_string(counts),
        }
    else:
        body = {
            "expression": expression,
            "elements": p.n,
            "graded": False,
            "max_rank": None,
            "whitney": None,
            "rank_polynomial": None,
        }
    body["properties"] = {
        name: {"holds": rep.verdicts[name], "witness": rep.witnesses.get(name)}
        for name in analysis.PROPERTY_NAMES
    }
    return body


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(p: core.Poset, name: str) -> str:
    """Graphviz digraph of the cover relation, one rank=same group per level
    when the poset is graded, edges pointing upward."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    if p.graded and p.n:
        levels: list[list[int]] = [[] for _ in range(p.max_rank + 1)]
        for v, r in enumerate(p.ranks):
            levels[r].append(v)
        for level in levels:
            names = " ".join(f"{_quote(p.labels[v])};" for v in level)
            lines.append(f"  {{ rank=same; {names} }}")
    else:
        for v in range(p.n):
            lines.append(f"  {_quote(p.labels[v])};")
    for a, b in sorted(p.covers):
        lines.append(f"  {_quote(p.labels[a])} -> {_quote(p.labels[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_report(args) -> int:
    p = dsl.evaluate(args.expression)
    body = report_dict(args.expression, p)
    if args.json:
        print(json.dumps(body, indent=2))
        return 0
    rows = [
        ("expression", body["expression"]),
        ("elements", str(body["elements"])),
        ("graded", "yes" if body["graded"] else "no"),
    ]
    if body["graded"]:
        rows.append(("max rank", str(body["max_rank"])))
        rows.append(("whitney", " ".join(str(c) for c in body["whitney"])))
        rows.append(("rank polynomial", body["rank_polynomial"]))
    else:
        rows.extend(
            (key, "not graded") for key in ("max rank", "whitney", "rank polynomial")
        )
    for name in analysis.PROPERTY_NAMES:
        entry = body["properties"][name]
        if entry["holds"] is None:
            value = "not graded"
        elif entry["holds"]:
            value = "holds"
        else:
            value = "fails  " + json.dumps(entry["witness"], sort_keys=True)
        rows.append((name, value))
    width = max(len(key) for key, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")
    return 0


def cmd_whitney(args) -> int:
    p = dsl.evaluate(args.expression)
    print(" ".join(str(c) for c in core.whitney(p)))
    return 0


def cmd_check(args) -> int:
    p = dsl.evaluate(args.expression)
    if not p.graded:
        print("error: properties are undefined for non-graded posets", file=sys.stderr)
        return 3
    name = PROPERTY_CHOICES[args.property_name]
    witness = analysis.property_violation(p, name)
    if witness is None:
        print(f"{name}: holds")
        return 0
    print(f"{name}: fails")
    print("witness: " + json.dumps(witness, sort_keys=True))
    return 1


def cmd_dot(args) -> int:
    p = dsl.evaluate(args.expression)
    text = render_dot(p, args.expression)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_iso(args) -> int:
    a = dsl.evaluate(args.left)
    b = dsl.evaluate(args.right)
    if core.is_isomorphic(a, b):
        print("isomorphic")
        return 0
    print("not isomorphic")
    return 1


def cmd_verify(args) -> int:
    from . import verification

    failed = False
    for result in verification.run_all():
        status = "PASS" if result.ok else "FAIL"
        print(f"{result.number:>2}  {status}  {result.title}: {result.detail}")
        failed = failed or not result.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetlab",
        description="Finite poset algebra: chain posets, products, rank "
        "profiles, normality, and Greene-Kleitman antichain families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("report", help="full property report for an expression")
    sp.add_argument("expression", help='poset expression, e.g. "B(3)[2]"')
    sp.add_argument("--json", action="store_true", help="emit the report as JSON")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("whitney", help="rank level sizes, bottom to top")
    sp.add_argument("expression")
    sp.set_defaults(func=cmd_whitney)

    sp = sub.add_parser(
        "check", help="test one property; exits 1 with a witness when it fails"
    )
    sp.add_argument("expression")
    sp.add_argument(
        "--property",
        required=True,
        choices=sorted(PROPERTY_CHOICES),
        dest="property_name",
    )
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("dot", help="Graphviz rendering of the cover relation")
    sp.add_argument("expression")
    sp.add_argument("-o", "--output", help="write to FILE instead of stdout")
    sp.set_defaults(func=cmd_dot)

    sp = sub.add_parser("iso", help="test two expressions for isomorphism")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser(
        "verify-paper",
        help="run the fixed verification suite, one row per criterion",
    )
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except dsl.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (core.PosetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
