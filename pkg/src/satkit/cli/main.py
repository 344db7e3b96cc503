"""Command-line entry point: ``satkit [SCRIPT] [--format human|json] ...``."""

from __future__ import annotations

import argparse
import logging
import sys

from satkit.cli.parser import ScriptError, parse_script
from satkit.cli.render import render_report
from satkit.cli.runner import Config, execute_script
from satkit.saturation import DEFAULT_DEGREE_BOUND


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="satkit",
        description="Decide saturation, radiciality and seminormality for morphisms of affine varieties over QQ.",
    )
    p.add_argument("script", nargs="?", default="-", help="script file (default: read stdin)")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND, metavar="N")
    p.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")
    p.add_argument("--no-timing", action="store_true", help="omit timings (byte-stable output)")
    p.add_argument("-v", "--verbose", action="store_true", help="log engine statistics to stderr")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    if args.degree_bound < 0:
        print("satkit: --degree-bound must be non-negative", file=sys.stderr)
        return 2
    try:
        if args.script == "-":
            text = sys.stdin.read()
        else:
            with open(args.script, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"satkit: cannot read script: {exc}", file=sys.stderr)
        return 2
    config = Config(args.format, args.degree_bound, args.order, args.no_timing)
    try:
        script = parse_script(text, args.order)
    except ScriptError as exc:
        print(f"satkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    report = execute_script(script, config)
    sys.stdout.write(render_report(report, args.format))
    if report.error is not None:
        print(f"satkit: {report.error}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
