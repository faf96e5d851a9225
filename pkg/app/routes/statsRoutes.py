"""
Statistics Routes Module

This module defines the ``stats`` subcommand, which prints the antibunching
discriminants (and optionally g2) of one configuration.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import argparse

from app.controllers.modelController import check_validity
from app.controllers.photstatController import STAT_KEYS, stat_report
from app.events.manager import result_manager
from app.routes.routeSupport import (
    add_length_arguments, apply_overrides, handle_errors, load_params, output_path, resolve_z
)


@handle_errors
def cmd_stats(args: argparse.Namespace) -> int:
    params = load_params(args.params)
    z = resolve_z(args, params)
    params = apply_overrides(params, args.set, z)
    check_validity(params, z, strict=True)
    report = stat_report(params, z, with_g2=args.g2)

    columns = ["z"] + [f"D_{key}" for key in STAT_KEYS] + [f"class_{key}" for key in STAT_KEYS]
    row = [z] + [report.D[key] for key in STAT_KEYS] + [report.classification[key].value for key in STAT_KEYS]
    if report.g2 is not None:
        columns += [f"g2_{key}" for key in STAT_KEYS]
        row += [report.g2.get(key) for key in STAT_KEYS]
    header = result_manager.header_lines(None, params, columns)
    result_manager.write_csv(header, columns, [row], path=output_path(args, "stats.csv"))
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    stats = subparsers.add_parser("stats", help="antibunching discriminants of one configuration")
    add_length_arguments(stats)
    stats.add_argument("--set", action="append", metavar="KEY=VALUE", help="parameter override")
    stats.add_argument("--g2", action="store_true", help="also print normalized g2")
    stats.set_defaults(handler=cmd_stats)
