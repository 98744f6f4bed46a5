"""Command-line front end.

Exit codes: 0 success (an infeasible composition is still an answer),
1 domain error, 2 parse error, 64 usage error. Results go to stdout and
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import scenarios, selftest
from .dot import export_dot
from .dsl import parse
from .errors import ParseError, ValueLatticeError
from .evaluate import build, run_queries
from .poset import DEFAULT_MAX_CARRIER

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="valuelattice", description="Order-theoretic value representations.")
    parser.add_argument(
        "--max-carrier", type=int, default=DEFAULT_MAX_CARRIER, metavar="N",
        help=f"largest dimension carrier to build (default {DEFAULT_MAX_CARRIER})",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("check", help="parse and validate a .vdl file").add_argument("file")
    sub.add_parser("eval", help="run the queries of a .vdl file").add_argument("file")
    dot = sub.add_parser("dot", help="print the Hasse diagram of one dimension as DOT")
    dot.add_argument("file")
    dot.add_argument("dim")
    sub.add_parser("scenario", help="run a built-in scenario").add_argument(
        "name", choices=sorted(scenarios.SCENARIOS)
    )
    sub.add_parser("selftest", help="run the invariant sweeps")
    return parser


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _dispatch(args) -> int:
    out = sys.stdout
    if args.command == "check":
        doc = parse(_read(args.file))
        ws = build(doc, max_carrier=args.max_carrier)
        print(f"ok: {len(ws.lrv)} dimensions, {len(ws.states)} states, {len(doc.queries)} queries", file=out)
    elif args.command == "eval":
        for line in run_queries(parse(_read(args.file)), max_carrier=args.max_carrier):
            print(line, file=out)
    elif args.command == "dot":
        ws = build(parse(_read(args.file)), max_carrier=args.max_carrier)
        out.write(export_dot(ws.lrv.poset(args.dim), args.dim))
    elif args.command == "scenario":
        for line in scenarios.SCENARIOS[args.name]():
            print(line, file=out)
    elif args.command == "selftest":
        results = selftest.run()
        for name, ok in results:
            print(f"{'PASS' if ok else 'FAIL'} {name}", file=out)
        return EXIT_OK if all(ok for _, ok in results) else EXIT_DOMAIN
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"{getattr(args, 'file', '<input>')}:{exc.line}:{exc.column}: parse error: "
              f"expected {exc.expected}, found {exc.found!r}", file=sys.stderr)
        return EXIT_PARSE
    except ValueLatticeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry() -> None:
    sys.exit(main())
