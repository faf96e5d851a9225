"""
Validation Routes Module

This module defines the ``validate`` subcommand. It prints the pass/fail
table and exits with 1 when any check failed.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import argparse

from app.controllers import validationController
from app.events.manager import result_manager
from app.exceptions import ValidationException
from app.routes.routeSupport import handle_errors, output_path


@handle_errors
def cmd_validate(args: argparse.Namespace) -> int:
    if args.level == "full":
        report = validationController.run_full(seed=args.seed, draws=args.draws)
    else:
        report = validationController.run_fast(seed=args.seed, draws=args.draws)
    result_manager.emit(validationController.format_report(report),
                        path=output_path(args, f"validate-{args.level}.txt"))
    if not report.passed:
        failed = [check.name for check in report.checks if not check.passed]
        raise ValidationException.ChecksFailed(f"failed checks: {', '.join(failed)}")
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    validate = subparsers.add_parser("validate", help="run the self-check suite")
    validate.add_argument("--level", choices=("fast", "full"), default="fast")
    validate.add_argument("--draws", type=int, default=validationController.DEFAULT_DRAWS,
                          help="random draws per check")
    validate.set_defaults(handler=cmd_validate)
