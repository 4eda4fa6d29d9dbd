#!/usr/bin/env python3
"""
Command-line interface for verifying quasi-Hopf instance files.

Exit codes: 0 when every check passes, 1 when a check or a construction's post-check fails,
2 for input errors (missing or malformed file, unknown suite, missing prerequisite block).
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from .exceptions import InstanceFormatError, NotInvertibleError, PostCheckError, PreconditionError, ShapeError
from .instance_file import SUFFIX, parse_instance, write_instance
from .instances import CATALOG, Instance, build_instance
from .suites import ALL, DERIVABLES, SUITES, derive, normalize_alpha_beta, run_suite
from .utils import resolve_log_level, resolve_max_workers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qha", description="Exact verification of quasi-Hopf algebras and their Yetter-Drinfeld structures"
    )
    parser.add_argument("--log-level", type=str, help="Logging level (default: WARNING, or QHA_LOG_LEVEL)")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Verify command
    verify_parser = subparsers.add_parser("verify", help="Run a verification suite on an instance file")
    verify_parser.add_argument("file", type=Path, help="Path to the .qha instance file")
    verify_parser.add_argument(
        "--suite", choices=[*SUITES, ALL], default=ALL, help="Suite to run (default: all applicable suites)"
    )
    verify_parser.add_argument("--format", choices=["text", "json"], default="text", help="Report format")
    verify_parser.add_argument(
        "--normalize-alpha-beta", action="store_true", help="Rescale alpha and beta so that ε(α) = ε(β) = 1"
    )
    verify_parser.add_argument(
        "--max-workers", type=int, help="Maximum number of concurrent threads (default: 10, or QHA_WORKERS)"
    )
    verify_parser.add_argument("--summary-csv", type=Path, help="Write per-group pass/fail counts to this CSV file")
    verify_parser.add_argument(
        "--anchors", action="store_true", help="Append a legend of the symbols used in the check formulas"
    )

    # Derive command
    derive_parser = subparsers.add_parser("derive", help="Print derived elements as exact rationals")
    derive_parser.add_argument("file", type=Path, help="Path to the .qha instance file")
    derive_parser.add_argument("--what", choices=DERIVABLES, required=True, help="Elements to derive")
    derive_parser.add_argument(
        "--normalize-alpha-beta", action="store_true", help="Rescale alpha and beta so that ε(α) = ε(β) = 1"
    )

    # Emit command
    emit_parser = subparsers.add_parser("emit", help="Write shipped instances as canonical .qha files")
    emit_parser.add_argument("name", choices=[*CATALOG, ALL], help="Instance to emit, or 'all'")
    emit_parser.add_argument("--out", type=Path, default=Path("instances"), help="Output directory")
    return parser


def _load(path: Path, normalize: bool) -> Instance:
    if not path.is_file():
        raise FileNotFoundError(f"instance file '{path}' does not exist")
    instance = parse_instance(path)
    return normalize_alpha_beta(instance) if normalize else instance


def _verify(args: argparse.Namespace) -> int:
    max_workers = resolve_max_workers(args.max_workers)
    instance = _load(args.file, args.normalize_alpha_beta)
    result = run_suite(instance, args.suite, max_workers=max_workers)
    if args.format == "json":
        print(json.dumps(result.to_dict(), indent=2, ensure_ascii=False))
    else:
        print(result.to_text(notation=args.anchors))
    if args.summary_csv is not None:
        result.report.summary_frame().write_csv(args.summary_csv)
        logger.info(f"Wrote summary to {args.summary_csv}")
    return EXIT_OK if result.passed else EXIT_FAILED


def _derive(args: argparse.Namespace) -> int:
    instance = _load(args.file, args.normalize_alpha_beta)
    for name, text in derive(instance, args.what).items():
        print(f"{name} = {text}")
    return EXIT_OK


def _emit(args: argparse.Namespace) -> int:
    names = list(CATALOG) if args.name == ALL else [args.name]
    for name in names:
        path = write_instance(build_instance(name), args.out / f"{name}{SUFFIX}")
        print(f"Wrote {path}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        logging.basicConfig(level=resolve_log_level(args.log_level), format="%(levelname)s %(name)s: %(message)s")
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT

    if args.command is None:
        parser.print_help()
        return EXIT_INPUT

    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "derive":
            return _derive(args)
        return _emit(args)
    except (InstanceFormatError, ShapeError, PreconditionError, FileNotFoundError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except PostCheckError as e:
        print(f"Failed: {e}", file=sys.stderr)
        print(e.report.to_text(), file=sys.stderr)
        return EXIT_FAILED
    except NotInvertibleError as e:
        print(f"Failed: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
