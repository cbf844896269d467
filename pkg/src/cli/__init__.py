"""Command-line surface: argument parsing, handlers, report writers and acceptance suites."""

from .acceptance import SUITES, SuiteResult, acceptance_frame, run_acceptance
from .app import USAGE_EXIT, build_parser, dispatch
from .commands import CommandResult, parse_grid
from .config import RunConfig, build_run_config

__all__ = [
    "SUITES",
    "SuiteResult",
    "acceptance_frame",
    "run_acceptance",
    "USAGE_EXIT",
    "build_parser",
    "dispatch",
    "CommandResult",
    "parse_grid",
    "RunConfig",
    "build_run_config",
]
