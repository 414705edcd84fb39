"""Command-line front end: tables to CSV/JSON and verification reports."""

from .run import COMMANDS, RunConfig, build_parser, main, parse_grid, run, verify

__all__ = ["COMMANDS", "RunConfig", "build_parser", "main", "parse_grid", "run", "verify"]
