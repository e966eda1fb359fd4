"""Command line entry point.

    pisoliton validate FILE [--format text|json]
    pisoliton analyze FILE [--seed N] [--format text|json] [--debug-eval ASSIGN]
    pisoliton paper-check [--seed N] [--format text|json]

Exit status: 0 when every check passes, 1 on a check failure, 2 on input errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .analysis import InputError, analyze, paper_check, validate
from .manifest import ManifestError, load_manifest

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _parse_assignment(raw: str) -> dict:
    out = {}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        name, _, value = part.partition("=")
        if not value:
            raise argparse.ArgumentTypeError(f"expected name=value, got {part!r}")
        try:
            out[name.strip()] = Fraction(value.strip())
        except ValueError:
            raise argparse.ArgumentTypeError(f"{value!r} is not a rational") from None
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pisoliton",
        description="Exact curvature and soliton checks for left-invariant Riemannian Pi-structures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="check the Lie algebra and the structure axioms")
    p.add_argument("file")
    add_format(p)

    p = sub.add_parser("analyze", help="run the full curvature, classification and soliton pipeline")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0, help="seed for random plane sweeps (default 0)")
    p.add_argument(
        "--debug-eval",
        metavar="ASSIGN",
        type=_parse_assignment,
        help="approximate evaluation at e.g. 'x1=1,x2=0,x3=1/2,c1=1'; never affects the exit status",
    )
    add_format(p)

    p = sub.add_parser("paper-check", help="reproduce the built-in reference instance exactly")
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "validate":
            report = validate(load_manifest(args.file))
        elif args.command == "analyze":
            report = analyze(load_manifest(args.file), seed=args.seed, debug_assignment=args.debug_eval)
        else:
            report = paper_check(seed=args.seed)
    except (ManifestError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
