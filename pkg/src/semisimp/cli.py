"""Command line entry point.

Complexes travel between commands as JSON on stdin/stdout::

    semisimp build gamma 1 | semisimp transform sd --repeat 2 | semisimp transform cil2 | semisimp cardinal

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import formats
from . import seqmat as M
from .actions import by_name, extend
from .errors import SemisimpError
from .sscore import AugSSet, boundary, cone_left, cone_right, gamma, hexagon, join, subcomplex_of_gamma
from .verify import OEIS, SUITES, run_oeis, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TRANSFORMS = ("cil", "cil0", "cil2", "sd", "cone-l", "cone-r", "join")


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """'a..b' -> (a, b) with -1 <= a <= b."""
    try:
        lo, hi = (int(part) for part in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like -1..6, got {text!r}") from None
    if lo < -1 or hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy -1 <= a <= b")
    return lo, hi


def _glue_ranges(argv: list[str]) -> list[str]:
    # "--rows -1..6" would be read as an option; rewrite it as "--rows=-1..6"
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--rows", "--cols") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semisimp",
                                description="Augmented semi-simplicial sets, cylinders and subdivisions.")
    sub = p.add_subparsers(dest="verb", required=True)

    b = sub.add_parser("build", help="emit a complex as JSON")
    b.add_argument("shape", choices=("gamma", "boundary", "hexagon", "subcomplex"))
    b.add_argument("arg", nargs="?",
                   help='n for gamma/boundary; for subcomplex a JSON file {"n": .., "generators": [[..], ..]}')

    t = sub.add_parser("transform", help="apply a construction to the complex on stdin")
    t.add_argument("op", choices=TRANSFORMS)
    t.add_argument("other", nargs="?", help="second operand file for join")
    t.add_argument("--repeat", type=int, default=1)
    t.add_argument("--input", help="read the complex from this file instead of stdin")

    c = sub.add_parser("cardinal", help="print the cardinal sequence of the complex on stdin")
    c.add_argument("--input")
    c.add_argument("--format", choices=("text", "json"), default="text")

    tb = sub.add_parser("table", help="print a window of a named matrix")
    tb.add_argument("name", choices=tuple(M.NAMED))
    tb.add_argument("--rows", type=parse_range, default=(-1, 6))
    tb.add_argument("--cols", type=parse_range, default=None)
    tb.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=tuple(SUITES) + ("all",))
    v.add_argument("--n", type=int, default=None, help="size bound (default depends on the suite)")

    o = sub.add_parser("oeis", help="check a matrix column against its closed form")
    o.add_argument("check", choices=tuple(OEIS))
    o.add_argument("--count", type=int, default=50)
    return p


def _read_complex(path: str | None) -> AugSSet:
    text = open(path, encoding="utf-8").read() if path else sys.stdin.read()
    return formats.augsset_from_json(text)


def _int_arg(value: str | None, what: str) -> int:
    if value is None:
        raise UsageError(f"{what} needs an integer argument")
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{what}: {value!r} is not an integer") from None


def cmd_build(args) -> int:
    if args.shape == "hexagon":
        X = hexagon()
    elif args.shape == "subcomplex":
        if not args.arg:
            raise UsageError("build subcomplex needs a JSON file")
        with open(args.arg, encoding="utf-8") as fh:
            gens_doc = json.load(fh)
        if not isinstance(gens_doc, dict) or "n" not in gens_doc or "generators" not in gens_doc:
            raise UsageError('subcomplex file must hold {"n": .., "generators": [..]}')
        X = subcomplex_of_gamma(int(gens_doc["n"]), gens_doc["generators"])
    else:
        n = _int_arg(args.arg, f"build {args.shape}")
        if n < -1:
            raise UsageError("n must be >= -1")
        X = gamma(n) if args.shape == "gamma" else boundary(n)
    print(formats.augsset_to_json(X))
    return EXIT_OK


def cmd_transform(args) -> int:
    if args.repeat < 1:
        raise UsageError("--repeat must be >= 1")
    X = _read_complex(args.input)
    other = None
    if args.op == "join":
        if not args.other:
            raise UsageError("transform join needs a FILE argument")
        other = _read_complex(args.other)
    elif args.other:
        raise UsageError(f"transform {args.op} takes no file argument")
    for _ in range(args.repeat):
        if args.op == "cone-l":
            X = cone_left(X)
        elif args.op == "cone-r":
            X = cone_right(X)
        elif args.op == "join":
            X = join(X, other)
        else:
            X = extend(X, by_name(args.op))
    print(formats.augsset_to_json(X))
    return EXIT_OK


def cmd_cardinal(args) -> int:
    a = _read_complex(args.input).cardinal()
    print(formats.seq_to_json(a) if args.format == "json" else str(a))
    return EXIT_OK


def cmd_table(args) -> int:
    A = M.named(args.name)
    cols = args.cols or (-1, args.rows[1] + 1)
    if args.format == "json":
        print(formats.matwin_to_json(A, args.rows, cols))
    else:
        print(formats.render_table(A, args.rows, cols))
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.n)
    failed = 0
    for c in checks:
        print(c.line())
        for note in c.notes:
            if note.startswith("waiver"):
                print(f"  {note}")
        failed += not c.ok
    print(f"{len(checks) - failed} passed, {failed} failed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_oeis(args) -> int:
    if not 0 <= args.count <= 1000:
        raise UsageError("--count must be between 0 and 1000")
    c = run_oeis(args.check, args.count)
    print(c.line())
    return EXIT_OK if c.ok else EXIT_FAIL


COMMANDS = {
    "build": cmd_build,
    "transform": cmd_transform,
    "cardinal": cmd_cardinal,
    "table": cmd_table,
    "verify": cmd_verify,
    "oeis": cmd_oeis,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_ranges(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, SemisimpError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"semisimp {args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
