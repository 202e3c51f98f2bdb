"""Command line interface.

Exit status: 0 conforming, 2 non-conforming, 3 hypothesis failure,
4 input error. With several inputs the largest status wins.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from .errors import InputError
from .polyz.poly import TERM_ORDERS
from .presentation import CONVENTIONS
from .report import COMMANDS, EXIT_INPUT, run, to_json, to_text
from .specdoc import (SpecDocument, example_from_expression, parse_spec,
                      serialize_spec, with_options)


def _covectors(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse ``"1,0;2,-1"`` into covectors."""
    try:
        return tuple(tuple(int(x) for x in part.split(",")) for part in text.split(";") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad covector list {text!r}") from None


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _load(source: str) -> SpecDocument:
    if source.startswith("example:"):
        return example_from_expression(source[len("example:"):])
    if source == "-":
        return parse_spec(sys.stdin.read())
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    return parse_spec(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusk",
        description="K-ring presentations of torus manifolds with shellable nerve.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} stage")
        p.add_argument("specs", nargs="+", metavar="SPEC",
                       help="spec file, '-' for stdin, or example:EXPR "
                            "(e.g. example:'hirzebruch(2)')")
        p.add_argument("--order", choices=sorted(TERM_ORDERS))
        p.add_argument("--convention", choices=sorted(CONVENTIONS))
        p.add_argument("--extra-t", type=_covectors, metavar="T1;T2",
                       help="extra covectors, e.g. '1,1;2,-1'")
        p.add_argument("--bound", type=int, help="degree bound for the Smith fallback")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock timings (breaks byte-identical output)")
        p.add_argument("-o", "--output",
                       help="output file (one input) or directory (several inputs)")
    ex = sub.add_parser("example", help="print a built-in example as a spec document")
    ex.add_argument("expr", help="e.g. 'simplex(3)', 'bott([[1,1],[0,1]])', "
                                 "'product(simplex(1), simplex(1))'")
    ex.add_argument("-o", "--output")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "example":
        try:
            text = serialize_spec(example_from_expression(args.expr))
        except InputError as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        if args.output:
            _write_atomic(Path(args.output), text)
        else:
            sys.stdout.write(text)
        return 0

    status = 0
    many = len(args.specs) > 1
    for i, source in enumerate(args.specs):
        try:
            doc = _load(source)
            doc = with_options(doc, order=args.order, convention=args.convention,
                               extra_t=args.extra_t, bound=args.bound)
        except InputError as exc:
            print(f"{source}: input error: {exc}", file=sys.stderr)
            status = max(status, EXIT_INPUT)
            continue
        rep = run(args.command, doc, timings=args.timings)
        text = to_json(rep) if args.format == "json" else to_text(rep)
        if args.output:
            out = Path(args.output)
            if many:
                stem = Path(source).stem if not source.startswith("example:") else f"example{i}"
                out = out / f"{stem}.{args.command}.{'json' if args.format == 'json' else 'txt'}"
            _write_atomic(out, text)
        else:
            sys.stdout.write(text)
        status = max(status, rep["exit_code"])
    return status


if __name__ == "__main__":
    sys.exit(main())
