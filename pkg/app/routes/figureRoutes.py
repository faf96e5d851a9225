"""
Figure Routes Module

This module defines the ``figure`` subcommand. It evaluates a preset and
writes ``<preset>.csv`` plus a gnuplot script ``<preset>.plt`` into --out.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import argparse
import os

from app.controllers import sweepController
from app.events.manager import result_manager
from app.routes.routeSupport import handle_errors


@handle_errors
def cmd_figure(args: argparse.Namespace) -> int:
    spec, columns, rows = sweepController.run_figure(args.preset, threads=args.threads)
    name = spec.preset.value
    directory = args.out or "."
    data_file = f"{name}.csv"

    scenario = spec.curves[0].sweep.scenario.value
    header = result_manager.header_lines(scenario, spec, columns, notes=spec.notes)
    result_manager.write_csv(header, columns, rows, path=os.path.join(directory, data_file))
    result_manager.emit(sweepController.plot_script(spec, columns, data_file),
                        path=os.path.join(directory, f"{name}.plt"))
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    figure = subparsers.add_parser("figure", help="reproduce a figure preset")
    figure.add_argument("preset", help="preset name, e.g. Fig2a or Fig8")
    figure.set_defaults(handler=cmd_figure)
