"""
Command-line entry point: argument parsing, run configuration and the
exception-to-exit-code boundary.
"""
import argparse
import sys
from typing import Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from distspec import __version__
from distspec.cli.commands import cmd_convert, cmd_enumerate, cmd_rho, cmd_tables, cmd_verify
from distspec.core.config import RunConfig, settings
from distspec.core.exceptions import DistSpecException, format_cli_error
from distspec.utils.logger import configure_logging, get_logger

THEOREMS = ("max", "min-structure", "min-identity", "forests", "charpoly", "lemmas", "conjecture", "remark")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distspec", description="Distance spectral radius toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized corpora")
    parser.add_argument("--workers", type=int, default=None, help="worker processes for eigen-solves")
    parser.add_argument("--format", dest="output_format", choices=("json", "csv", "text"), default=None)
    parser.add_argument("--tol", type=float, default=None, help="residual tolerance override")
    parser.add_argument("--output-dir", default="reports", help="directory for report files")
    parser.add_argument("--log-level", default=None)
    parser.add_argument("--log-json", action="store_true")
    commands = parser.add_subparsers(dest="command", required=True)

    rho = commands.add_parser("rho", help="distance spectral radius of one graph")
    rho.add_argument("source", help="graph6 string, family expression, or .json/.g6 file")
    rho.set_defaults(handler=cmd_rho)

    verify = commands.add_parser("verify", help="check an extremal statement over a scope")
    verify.add_argument("theorem", choices=THEOREMS)
    verify.add_argument("--m", help="size or size range, e.g. 5..9")
    verify.add_argument("--n", help="order or order range")
    verify.add_argument("--c", help="component count or range (forests)")
    verify.add_argument("--pairs", type=int, default=200, help="lemmas: (graph, non-edge) pairs")
    verify.add_argument("--corpus", type=int, default=500, help="lemmas: corpus size")
    verify.add_argument("--max-n", type=int, default=None, help="lemmas: largest corpus order")
    verify.set_defaults(handler=cmd_verify)

    tables = commands.add_parser("tables", help="rank the candidates for (n, s) = (9, 1) and (10, 1)")
    tables.set_defaults(handler=cmd_tables)

    enumerate_ = commands.add_parser("enumerate", help="print isomorphism classes as graph6 lines")
    enumerate_.add_argument("mode", choices=("by-size", "order-size", "forests", "structured"))
    enumerate_.add_argument("--m", type=int)
    enumerate_.add_argument("--n", type=int)
    enumerate_.add_argument("--c", type=int)
    enumerate_.add_argument("--s", type=int)
    enumerate_.add_argument("--max-n", type=int, default=None)
    enumerate_.add_argument("--all-forests", action="store_true")
    enumerate_.add_argument("--count", action="store_true", help="print only the number of classes")
    enumerate_.set_defaults(handler=cmd_enumerate)

    convert = commands.add_parser("convert", help="convert between graph6 and edge-list JSON")
    convert.add_argument("source")
    convert.add_argument("--to", choices=("graph6", "edges"), default="edges")
    convert.add_argument("--output", default=None)
    convert.set_defaults(handler=cmd_convert)
    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    """RunConfig from settings plus flags; tolerance overrides are echoed into report metadata."""
    update = {}
    overrides = {}
    if args.seed is not None:
        update["seed"] = args.seed
    if args.workers is not None:
        update["workers"] = args.workers
    if args.output_format is not None:
        update["output_format"] = args.output_format
    if args.tol is not None:
        update["residual_tol"] = args.tol
        overrides["residual_tol"] = repr(args.tol)
    return RunConfig(**update, overrides=overrides)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or settings.log_level, args.log_json or settings.log_json)
    logger = get_logger("cli")
    try:
        config = build_config(args)
        return args.handler(args, config, sys.stdout)
    except PydanticValidationError as exc:
        print(f"error: invalid configuration: {exc.errors()[0]['msg']}", file=sys.stderr)
        return 1
    except DistSpecException as exc:
        logger.error("command_failed", command=args.command, error=exc.message, **exc.details)
        print(format_cli_error(exc), file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
