"""
Oracle Routes Module

This module defines the ``oracle`` subcommand: the exact truncated Fock-space
Zeno parameters next to the analytic values for the same configuration,
optionally with a truncation certificate.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import argparse
import logging

from app.controllers import fockOracleController, zenoController
from app.events.manager import result_manager
from app.exceptions import ParameterException
from app.models import ProbeScenario
from app.routes.routeSupport import (
    add_length_arguments, apply_overrides, handle_errors, load_params, output_path, resolve_z
)
from app.schemas import FockConfig
from app.simulation_config import DEFAULT_DIMS, Z_STEPS

logger = logging.getLogger(__name__)

ORACLE_COLUMNS = ["source", "z", "Z_S", "Z_V", "Z_A"]


def _dims(raw: str):
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise ParameterException.InvalidInput(f"--dims {raw!r} is not a comma separated list of integers")


@handle_errors
def cmd_oracle(args: argparse.Namespace) -> int:
    params = load_params(args.params)
    z = resolve_z(args, params)
    params = apply_overrides(params, args.set, z)
    cfg = FockConfig(dims=_dims(args.dims), z_steps=args.z_steps)

    analytic = zenoController.zeno_for_scenario(params, z, args.scenario)
    exact = fockOracleController.oracle_zeno(params, cfg, z, args.scenario)
    rows = [[report.source, z] + [report.Z[key] for key in ("S", "V", "A")] for report in (analytic, exact)]

    notes = f"dims: {','.join(str(d) for d in cfg.dims)}"
    if args.certify:
        certificate = fockOracleController.certify_truncation(params, cfg, z)
        notes += f"\ncertified: {certificate.certified} (max change {certificate.max_change:.3e})"
        if certificate.reason:
            notes += f"\nreason: {certificate.reason}"

    header = result_manager.header_lines(args.scenario.value, params, ORACLE_COLUMNS, notes=notes)
    result_manager.write_csv(header, ORACLE_COLUMNS, rows, path=output_path(args, "oracle.csv"))
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    oracle = subparsers.add_parser("oracle", help="exact truncated Fock-space Zeno parameters")
    oracle.add_argument("--scenario", type=ProbeScenario, default=ProbeScenario.PUMP_PROBE,
                        choices=list(ProbeScenario), metavar="SCENARIO")
    add_length_arguments(oracle)
    oracle.add_argument("--set", action="append", metavar="KEY=VALUE", help="parameter override")
    oracle.add_argument("--dims", default=",".join(str(d) for d in DEFAULT_DIMS),
                        help="truncation per mode, order p1,p2,L1,L2,S,V,A")
    oracle.add_argument("--z-steps", type=int, default=Z_STEPS, dest="z_steps")
    oracle.add_argument("--certify", action="store_true", help="also certify the truncation")
    oracle.set_defaults(handler=cmd_oracle)
