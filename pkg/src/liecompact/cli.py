"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 no compact inner form for
the requested twist, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Sequence

from .chevalley import constants
from .classifier import check_against_exceptions, classify, full_table
from .compact_form import certificate
from .root_system import DynkinTypeError, height, parse_type, root_system
from .weyl import InvariantViolation, longest_element, minus_w0

EXIT_OK, EXIT_USAGE, EXIT_ABSENT, EXIT_INTERNAL = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _coords(root) -> str:
    return "[" + ", ".join(str(c) for c in root) + "]"


def _csv(header: Sequence[str], rows: List[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    # one record per line keeps large tables diffable
    if isinstance(obj, list):
        if not obj:
            return "[]\n"
        return "[\n" + ",\n".join(json.dumps(r) for r in obj) + "\n]\n"
    return json.dumps(obj) + "\n"


def _table(header: Sequence[str], rows: List[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _type(text: str):
    try:
        return parse_type(text)
    except DynkinTypeError as exc:
        raise UsageError(str(exc)) from exc


def cmd_roots(args) -> tuple:
    t = _type(args.type)
    rs = root_system(t)
    if args.count_only:
        return EXIT_OK, f"{rs.n_pos}\n"
    if args.format == "json":
        return EXIT_OK, _json(rs.to_json())
    if args.format == "csv":
        return EXIT_OK, _csv(
            ("index", "height", "coords"),
            [(k + 1, height(r), " ".join(map(str, r))) for k, r in enumerate(rs.positive_roots)],
        )
    rows = [(k + 1, height(r), _coords(r)) for k, r in enumerate(rs.positive_roots)]
    head = f"{rs.dynkin.label}: rank {rs.rank}, {len(rs.roots)} roots, {rs.n_pos} positive\n"
    return EXIT_OK, head + _table(("#", "height", "coords"), rows)


def cmd_weyl(args) -> tuple:
    t = _type(args.type)
    rs = root_system(t)
    w = longest_element(rs)
    psi = minus_w0(rs, w)
    word = [i + 1 for i in w.word]
    if args.format == "json":
        return EXIT_OK, _json({"type": rs.dynkin.label, "length": len(word), "word": word, "minus_w0": psi.labels()})
    if args.format == "csv":
        return EXIT_OK, _csv(("field", "value"), [
            ("type", rs.dynkin.label),
            ("length", len(word)),
            ("word", " ".join(map(str, word))),
            ("minus_w0", " ".join(map(str, psi.labels()))),
        ])
    lines = [
        f"{rs.dynkin.label}: longest element, length {len(word)}",
        "word:     " + " ".join(f"s{i}" for i in word),
        "-w0:      " + " ".join(f"{i + 1}->{j}" for i, j in enumerate(psi.labels())),
        "-w0 = id: " + ("yes" if psi.is_identity() else "no"),
    ]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_constants(args) -> tuple:
    t = _type(args.type)
    sc = constants(t)
    rows = sc.rows()
    if args.format == "json":
        return EXIT_OK, _json({
            "type": sc.rs.dynkin.label,
            "rows": [{"alpha": list(a), "beta": list(b), "N": v} for a, b, v in rows],
        })
    if args.format == "csv":
        return EXIT_OK, _csv(
            ("alpha_coords", "beta_coords", "N"),
            [(" ".join(map(str, a)), " ".join(map(str, b)), v) for a, b, v in rows],
        )
    head = f"{sc.rs.dynkin.label}: {len(rows)} summable pairs (alpha before beta)\n"
    return EXIT_OK, head + _table(("alpha", "beta", "N"), [(_coords(a), _coords(b), v) for a, b, v in rows])


def cmd_certify(args) -> tuple:
    t = _type(args.type)
    rec = classify(t)
    if not rec.condition_v:
        return EXIT_ABSENT, None, f"{t}: no compact inner form predicted (w0 o psi != -1)\n"
    cert = certificate(t)
    code = EXIT_OK if cert.passed else EXIT_INTERNAL
    if args.format == "json":
        body = cert.to_json()
        body["type"] = str(t)
        return code, _json(body)
    checks = [("closure", cert.closure), ("negative_definite", cert.negative_definite), ("antilinear_fixed", cert.antilinear_fixed)]
    if args.format == "csv":
        return code, _csv(("check", "passed"), [(n, str(v).lower()) for n, v in checks])
    lines = [f"{t}: compact real form certificate"]
    lines += [f"  {name:<18} {'PASS' if ok else 'FAIL'}" for name, ok in checks]
    lines.append("  gram diagonal:     " + " ".join(str(v) for v in cert.gram_diagonal_sample))
    return code, "\n".join(lines) + "\n"


def _mark(v: bool) -> str:
    return "yes" if v else "no"


def cmd_classify(args) -> tuple:
    if args.all:
        records = full_table(args.max_rank)
    elif args.type:
        records = [classify(_type(args.type))]
    else:
        raise UsageError("classify needs a TYPE or --all")

    err = ""
    code = EXIT_OK
    if args.check_paper:
        bad = check_against_exceptions(records)
        if bad:
            code = EXIT_INTERNAL
            err = "".join(f"mismatch: {b}\n" for b in bad)

    if args.format == "json":
        return code, _json([r.to_json() for r in records]), err
    header = ("type", "twist", "condition_v", "cartan_type", "compact_inner_form",
              "compact_cartan", "discrete_series", "witness")
    rows = []
    for r in records:
        j = r.to_json()
        rows.append((j["type"], j["twist"]) + tuple(j[h] for h in header[2:7]) + ("certified" if r.witness else "none",))
    if args.format == "csv":
        return code, _csv(header, [row[:2] + tuple(str(v).lower() for v in row[2:7]) + row[7:] for row in rows]), err
    table_rows = [(str(r.dynkin), _mark(r.condition_v), "certified" if r.witness else "-", "; ".join(r.notes)) for r in records]
    out = _table(("type", "condition_v", "witness", "notes"), table_rows)
    out += "cartan_type, compact_cartan and discrete_series equal condition_v (derived labels)\n"
    return code, out, err


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")

    parser = argparse.ArgumentParser(prog="liecompact", description="Root systems, Chevalley bases and compact real forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="positive roots in generation order")
    p.add_argument("type")
    p.add_argument("--count-only", action="store_true", help="print only the number of positive roots")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("weyl", parents=[common], help="longest element word and -w0 permutation")
    p.add_argument("type")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("constants", parents=[common], help="structure constants N(alpha, beta)")
    p.add_argument("type")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("certify", parents=[common], help="compact real form certificate")
    p.add_argument("type")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("classify", parents=[common], help="decide w0 o psi = -1 per type and twist")
    p.add_argument("type", nargs="?")
    p.add_argument("--all", action="store_true", help="every type and twist up to --max-rank")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--check-paper", action="store_true",
                   help="compare against the known exception list; exit nonzero on mismatch")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_rank", 1) < 1:
        parser.error("--max-rank must be >= 1")
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    code, out = result[0], result[1]
    err = result[2] if len(result) > 2 else ""
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
