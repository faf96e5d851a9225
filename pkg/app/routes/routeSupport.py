"""
Route Support Module

This module holds the pieces every subcommand shares: parameter-file
ingestion, --set overrides, propagation-length arguments and the mapping of
domain errors onto process exit codes.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import argparse
import functools
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from app.controllers.modelController import apply_axis
from app.controllers.sweepController import figure_params
from app.exceptions import HyperRamanError, ParameterException
from app.models import SweepAxisName
from app.schemas import SystemParams

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], int]


def handle_errors(handler: Handler) -> Handler:
    """
    Wraps a subcommand handler so domain errors become exit codes.

    Notes:
        - HyperRamanError subclasses return their exit_code after printing
          the detail to stderr
        - pydantic validation errors are parse errors (exit 2)
        - anything else is logged and re-raised
    """
    @functools.wraps(handler)
    def wrapper(args: argparse.Namespace) -> int:
        try:
            return handler(args)
        except HyperRamanError as exc:
            logger.error("%s: %s", type(exc).__name__, exc.detail)
            print(f"error: {exc.detail}", file=sys.stderr)
            return exc.exit_code
        except ValidationError as exc:
            logger.error("invalid input: %s", exc)
            print(f"error: invalid input: {exc}", file=sys.stderr)
            return ParameterException.InvalidInput.exit_code
        except Exception as exc:
            logger.error("unexpected failure in %s: %s", handler.__name__, exc)
            raise
    return wrapper


def read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParameterException.InvalidInput(f"cannot read {path}: {exc.strerror}")


def load_params(path: Optional[str]) -> SystemParams:
    """
    Reads a SystemParams JSON file.

    Without a path the shared reference figure parameters are used.
    """
    if path is None:
        logger.info("no parameter file given; using the reference figure parameters")
        return figure_params()
    return SystemParams.model_validate_json(read_text(path))


def _parse_override(item: str) -> Tuple[str, float]:
    key, sep, raw = item.partition("=")
    if not sep or not key:
        raise ParameterException.InvalidInput(f"override {item!r} is not key=value")
    try:
        return key.strip(), float(raw)
    except ValueError:
        raise ParameterException.InvalidInput(f"override {item!r} has a non-numeric value")


def apply_overrides(params: SystemParams, overrides: Optional[List[str]], z: float) -> SystemParams:
    """
    Applies --set key=value overrides.

    Accepted keys are coupling names (g, chi, Gamma1, ...), ``k.<mode>``,
    ``amp.<mode>.mag``, ``amp.<mode>.phase`` and every sweep axis name.
    Axis overrides are applied after the plain field overrides.
    """
    if not overrides:
        return params
    data: Dict[str, Any] = params.model_dump()
    axes = []
    for item in overrides:
        key, value = _parse_override(item)
        path = key.split(".")
        if key in SweepAxisName._value2member_map_:
            axes.append((SweepAxisName(key), value))
        elif len(path) == 1 and key in data and key not in ("k", "amp"):
            data[key] = value
        elif len(path) == 2 and path[0] == "k" and path[1] in data["k"]:
            data["k"][path[1]] = value
        elif len(path) == 3 and path[0] == "amp" and path[1] in data["amp"] and path[2] in ("mag", "phase"):
            data["amp"][path[1]][path[2]] = value
        else:
            raise ParameterException.InvalidInput(f"unknown override key {key!r}")
    params = SystemParams.model_validate(data)
    for axis, value in axes:
        params = apply_axis(params, axis, value, z)
    return params


def add_length_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--z", type=float, help="propagation length")
    group.add_argument("--gz", type=float, help="propagation length in units of 1/g")


def resolve_z(args: argparse.Namespace, params: SystemParams) -> float:
    """Propagation length from --z or --gz."""
    if args.z is not None:
        return args.z
    if params.g <= 0.0:
        raise ParameterException.InvalidInput("--gz needs g > 0")
    return args.gz / params.g


def output_path(args: argparse.Namespace, name: str) -> Optional[str]:
    """File under --out, or None for standard output."""
    if not args.out:
        return None
    return os.path.join(args.out, name)
