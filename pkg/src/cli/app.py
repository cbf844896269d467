"""Argument parsing and dispatch for the ``vnlab`` command line."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from ..common.errors import LabError
from .commands import register_commands
from .config import build_run_config
from .io import write_frame, write_json

LOGGER = logging.getLogger(__name__)

USAGE_EXIT = 64


class LabArgumentParser(argparse.ArgumentParser):
    """Usage errors (unknown subcommand, bad option) exit with 64 instead of argparse's 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(USAGE_EXIT)


def build_parser() -> LabArgumentParser:
    parser = LabArgumentParser(
        prog="vnlab",
        description="Finite-dimensional shadows of von Neumann algebra constructions.",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level.")
    parser.add_argument("--tol", type=float, help="Numerical tolerance (default 1e-9 or VNLAB_TOL).")
    parser.add_argument("--seed", type=int, help="Seed for every random draw (default VNLAB_SEED).")
    parser.add_argument("--caps", help="Cap overrides, e.g. 'crossed_dim=256,ball_size=1000'.")
    parser.add_argument("--progress", action="store_true", help="Show tqdm progress bars.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=LabArgumentParser)
    register_commands(sub)
    return parser


def _input_paths(args: argparse.Namespace) -> List[Path]:
    return [value for key, value in vars(args).items() if key != "output" and isinstance(value, Path)]


def _command_name(args: argparse.Namespace) -> str:
    nested = [getattr(args, key, None) for key in ("mekler_command", "itpfi_command", "catalog_command")]
    return " ".join([args.command, *[n for n in nested if n]])


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        run = build_run_config(
            command=_command_name(args),
            inputs=_input_paths(args),
            output=args.output,
            format=args.format,
            tol=args.tol,
            seed=args.seed,
            caps=args.caps,
            progress=args.progress,
        )
        config = run.lab_config()
        LOGGER.debug("Running '%s' with tol=%s seed=%s.", run.command, config.tol, config.seed)
        result = args.handler(args, config)
        if run.output_format(result.default_format) == "csv" and result.frame is not None:
            write_frame(result.frame, run.output)
        else:
            write_json(result.payload, run.output)
    except LabError as exc:
        LOGGER.error("%s failed: %s", args.command, exc)
        sys.stderr.write(f"vnlab: {exc}\n")
        return exc.exit_code

    if result.exit_code:
        LOGGER.warning("%s finished with a failed consistency check (exit %s).", run.command, result.exit_code)
    return result.exit_code


__all__ = ["LabArgumentParser", "build_parser", "dispatch", "USAGE_EXIT"]
