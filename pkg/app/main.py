"""
hrzeno Main Application Module

This module builds the command-line interface, registers every subcommand
and dispatches to its handler. It serves as the entry point for the tool
(``python -m app.main``).

Author: Sasank Tanikella
Created: 10-16-2026
"""

import argparse
import logging
import sys
from typing import List, Optional

from app.routes import figureRoutes, oracleRoutes, statsRoutes, validateRoutes, zenoRoutes
from app.simulation_config import LOG_LEVEL, THREADS, TOOL_NAME, TOOL_VERSION

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """
    Assembles the argument parser with global flags and subcommands.

    Returns:
        argparse.ArgumentParser: Parser whose subcommands set ``handler``
    """
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Zeno and anti-Zeno parameters and photon antibunching in hyper-Raman processes",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("--params", help="SystemParams JSON file (default: reference figure parameters)")
    parser.add_argument("--out", help="output directory (default: standard output)")
    parser.add_argument("--threads", type=int, default=THREADS, help="worker threads for sweeps")
    parser.add_argument("--seed", type=int, default=0, help="seed for random validation draws")
    parser.add_argument("--log-level", default=LOG_LEVEL, dest="log_level",
                        choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    # Register subcommands
    for routes in (zenoRoutes, statsRoutes, figureRoutes, validateRoutes, oracleRoutes):
        routes.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs one subcommand.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        int: Process exit code; 2 for unparseable arguments
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    # basicConfig already ran in simulation_config
    logging.getLogger().setLevel(getattr(logging, args.log_level))
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    logger.debug("running %s", args.command)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
