"""Command-line front end.

Results go to stdout (or ``--out``), diagnostics to stderr.  Exit status:
0 success, 1 verification failed, 2 usage or parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, TextIO

from .gaussint import GaussInt
from .identities import enumerate_primitive_triples, lemma_lhs, lemma_rhs, th2_solution
from .pell import th1_family
from .quadruple import Quadruple, verify_solution
from .search import SearchConfig, search

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

QUAD_COLUMNS = ["w_re", "w_im", "x_re", "x_im", "y_re", "y_im", "z_re", "z_im",
                "sum_re", "sum_im", "verified"]


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _quad_record(q: Quadruple, ok: bool) -> dict:
    return {
        "w": q.w.to_json(),
        "x": q.x.to_json(),
        "y": q.y.to_json(),
        "z": q.z.to_json(),
        "exponent": q.exponent,
        "sum": q.lhs().to_json(),
        "verified": ok,
    }


def _quad_row(q: Quadruple, ok: bool) -> list[str]:
    s = q.lhs()
    row = []
    for g in (*q.terms(), s):
        row += [str(g.re), str(g.im)]
    return row + ["true" if ok else "false"]


def _csv_writer(out: TextIO):
    return csv.writer(out, lineterminator="\n")


def _emit_quads(items: Iterable[tuple[dict, str, Quadruple]], fmt: str, out: TextIO) -> int:
    """Print each (extra json fields, pretty prefix, quadruple); return the exit status."""
    status = EXIT_OK
    writer = None
    if fmt == "csv":
        writer = _csv_writer(out)
        writer.writerow(QUAD_COLUMNS)
    for extra, prefix, q in items:
        ok = verify_solution(q)
        if not ok:
            status = EXIT_FAILED
        if fmt == "json":
            out.write(_dumps({**extra, **_quad_record(q, ok)}) + "\n")
        elif fmt == "csv":
            writer.writerow(_quad_row(q, ok))
        else:
            out.write(f"{prefix}{q}  {'OK' if ok else 'FAIL'}\n")
    return status


def cmd_pell_family(count: int, fmt: str = "pretty", out: TextIO | None = None) -> int:
    out = out or sys.stdout
    items = (({"k": k}, "", th1_family(k)) for k in range(1, count + 1))
    return _emit_quads(items, fmt, out)


def cmd_triple_family(max_c: int, fmt: str = "pretty", out: TextIO | None = None) -> int:
    out = out or sys.stdout
    items = (
        ({"triple": list(t.astuple())}, f"({t.a},{t.b},{t.c}): ", th2_solution(t))
        for t in enumerate_primitive_triples(max_c)
    )
    return _emit_quads(items, fmt, out)


def cmd_verify(w: str, x: str, y: str, z: str, exponent: int = 5, fmt: str = "pretty",
               out: TextIO | None = None, err: TextIO | None = None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    terms = []
    for name, token in zip("wxyz", (w, x, y, z)):
        try:
            terms.append(GaussInt.parse(token))
        except ValueError:
            err.write(f"error: cannot parse --{name} {token!r} as a Gaussian integer\n")
            return EXIT_USAGE
    if exponent < 1:
        err.write("error: --exponent must be >= 1\n")
        return EXIT_USAGE
    q = Quadruple(*terms, exponent=exponent)
    lhs, rhs = q.lhs(), q.rhs()
    equal = lhs == rhs
    if fmt == "json":
        out.write(_dumps({"lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": equal}) + "\n")
    elif fmt == "csv":
        writer = _csv_writer(out)
        writer.writerow(["lhs_re", "lhs_im", "rhs_re", "rhs_im", "equal"])
        writer.writerow([lhs.re, lhs.im, rhs.re, rhs.im, "true" if equal else "false"])
    else:
        out.write(f"lhs = {lhs}\nrhs = {rhs}\n{'equal' if equal else 'NOT equal'}\n")
    return EXIT_OK if equal else EXIT_FAILED


def cmd_lemma(a: int, b: int, c: int, fmt: str = "pretty", out: TextIO | None = None) -> int:
    out = out or sys.stdout
    lhs, rhs = lemma_lhs(a, b, c), lemma_rhs(a, b, c)
    match = lhs == rhs
    if fmt == "json":
        out.write(_dumps({"a": a, "b": b, "c": c, "lhs": lhs.to_json(),
                          "rhs": rhs.to_json(), "match": match}) + "\n")
    elif fmt == "csv":
        writer = _csv_writer(out)
        writer.writerow(["a", "b", "c", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "match"])
        writer.writerow([a, b, c, lhs.re, lhs.im, rhs.re, rhs.im, "true" if match else "false"])
    else:
        out.write(f"lhs = {lhs}\n")
        out.write(f"rhs = {rhs}    [80i*abc*(a^2+b^2-c^2)]\n")
        out.write("match\n" if match else "MISMATCH\n")
    return EXIT_OK if match else EXIT_FAILED


def cmd_search(bound: int, exponent: int = 5, shards: int = 1, include_zero: bool = False,
               out: str | None = None, fmt: str = "json",
               stdout: TextIO | None = None, err: TextIO | None = None) -> int:
    stdout, err = stdout or sys.stdout, err or sys.stderr
    report = search(SearchConfig(bound, exponent, shards, include_zero))

    buf = io.StringIO()
    if fmt == "csv":
        writer = _csv_writer(buf)
        writer.writerow(QUAD_COLUMNS + ["orbit_size"])
        for cls in report.classes:
            writer.writerow(_quad_row(cls.representative, True) + [cls.orbit_size])
    elif fmt == "pretty":
        for cls in report.classes:
            buf.write(f"{cls.representative}   sum={cls.sum}  orbit={cls.orbit_size}\n")
    else:
        for cls in report.classes:
            buf.write(cls.to_json_line() + "\n")

    try:
        if out is None or out == "-":
            stdout.write(buf.getvalue())
        else:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                fh.write(buf.getvalue())
    except OSError as exc:
        err.write(f"error: cannot write results: {exc}\n")
        return EXIT_IO

    err.write(f"bound={bound} exponent={exponent} shards={shards} "
              f"include_zero={str(include_zero).lower()} points={report.points} "
              f"pairs={report.pairs} collision_keys={report.collision_keys} "
              f"classes={len(report.classes)} seconds={report.seconds:.3f}\n")
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    fmt_choices = ["pretty", "json", "csv"]
    parser = argparse.ArgumentParser(
        prog="taxicab5",
        description="Gaussian-integer solutions of w^5 + x^5 = y^5 + z^5.",
    )
    parser.add_argument("--format", choices=fmt_choices, default=None)
    # also accept --format after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=fmt_choices, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pell-family", parents=[common], help="Pell-number family")
    p.add_argument("--count", type=_positive, required=True)

    p = sub.add_parser("triple-family", parents=[common], help="Pythagorean-triple family")
    p.add_argument("--max-c", type=_positive, required=True)

    p = sub.add_parser("verify", parents=[common], help="check w^e + x^e = y^e + z^e")
    for name in "wxyz":
        p.add_argument(f"--{name}", required=True)
    p.add_argument("--exponent", type=_positive, default=5)

    p = sub.add_parser("lemma", parents=[common], help="evaluate the four-term identity")
    for name in "abc":
        p.add_argument(f"--{name}", type=int, required=True)

    p = sub.add_parser("search", parents=[common], help="exhaustive box search")
    p.add_argument("--bound", type=_positive, required=True)
    p.add_argument("--exponent", type=_positive, default=5)
    p.add_argument("--shards", type=_positive, default=1)
    p.add_argument("--include-zero", action="store_true")
    p.add_argument("--out", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format
    if args.command == "pell-family":
        return cmd_pell_family(args.count, fmt or "pretty")
    if args.command == "triple-family":
        return cmd_triple_family(args.max_c, fmt or "pretty")
    if args.command == "verify":
        return cmd_verify(args.w, args.x, args.y, args.z, args.exponent, fmt or "pretty")
    if args.command == "lemma":
        return cmd_lemma(args.a, args.b, args.c, fmt or "pretty")
    return cmd_search(args.bound, args.exponent, args.shards, args.include_zero,
                      args.out, fmt or "json")


if __name__ == "__main__":
    sys.exit(main())
