"""
Zeno Routes Module

This module defines the ``zeno`` and ``sweep`` subcommands. ``zeno`` prints
the Zeno parameters of one configuration; ``sweep`` evaluates a JSON sweep
specification over its grid.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import argparse
import logging
import os

from app.controllers import sweepController, zenoController
from app.controllers.modelController import check_validity, impose_special_mismatch
from app.events.manager import result_manager
from app.models import ProbeScenario
from app.routes.routeSupport import (
    add_length_arguments, apply_overrides, handle_errors, load_params, output_path, read_text, resolve_z
)
from app.schemas import SweepSpec

logger = logging.getLogger(__name__)

ZENO_COLUMNS = ["scenario", "z", "Z_S", "Z_V", "Z_A", "class_S", "class_V", "class_A"]


@handle_errors
def cmd_zeno(args: argparse.Namespace) -> int:
    """
    Prints Z_S, Z_V, Z_A and their classification as one CSV row.

    Returns:
        int: 0 on success; 2 on parse errors, 3 on a hard validity violation
    """
    params = load_params(args.params)
    z = resolve_z(args, params)
    params = apply_overrides(params, args.set, z)
    check_validity(params, z, strict=True)

    if args.special:
        report = zenoController.zeno_case1_special_mismatch(impose_special_mismatch(params), z)
    else:
        report = zenoController.zeno_for_scenario(params, z, args.scenario)

    row = [report.scenario.value, report.z]
    row += [report.Z[key] for key in ("S", "V", "A")]
    row += [report.classification[key].value for key in ("S", "V", "A")]
    header = result_manager.header_lines(report.scenario.value, params, ZENO_COLUMNS,
                                         notes=f"source: {report.source}")
    result_manager.write_csv(header, ZENO_COLUMNS, [row], path=output_path(args, "zeno.csv"))
    return 0


@handle_errors
def cmd_sweep(args: argparse.Namespace) -> int:
    """
    Evaluates a sweep specification file.

    The file's own params are used unless --params is given.
    """
    spec = SweepSpec.model_validate_json(read_text(args.spec))
    if args.params:
        spec = spec.model_copy(update={"params": load_params(args.params)})
    columns, rows = sweepController.run_sweep(spec, threads=args.threads, strict=True)
    header = result_manager.header_lines(spec.scenario.value, spec, columns)
    name = os.path.splitext(os.path.basename(args.spec))[0] + ".csv"
    result_manager.write_csv(header, columns, rows, path=output_path(args, name))
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    zeno = subparsers.add_parser("zeno", help="Zeno parameters of one configuration")
    zeno.add_argument("--scenario", type=ProbeScenario, default=ProbeScenario.PUMP_PROBE,
                      choices=list(ProbeScenario), metavar="SCENARIO")
    add_length_arguments(zeno)
    zeno.add_argument("--set", action="append", metavar="KEY=VALUE", help="parameter override")
    zeno.add_argument("--special", action="store_true",
                      help="pump-probe case under dk_S z = -dk_A z = dk_Lj z")
    zeno.set_defaults(handler=cmd_zeno)

    sweep = subparsers.add_parser("sweep", help="evaluate a sweep specification")
    sweep.add_argument("spec", help="JSON sweep specification")
    sweep.set_defaults(handler=cmd_sweep)
