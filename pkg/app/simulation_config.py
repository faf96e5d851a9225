"""
Simulation Configuration Module

This module loads runtime settings for the analytic engine, the sweep runner
and the Fock-space oracle. Values come from the environment (optionally a
local .env file) and fall back to the defaults below.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import os
import logging
from typing import Tuple

from dotenv import load_dotenv

load_dotenv()

TOOL_NAME = "hrzeno"
TOOL_VERSION = "1.0.0"

# Mode order shared by parameter files, field expansions and the oracle basis
MODE_ORDER: Tuple[str, ...] = ("p1", "p2", "L1", "L2", "S", "V", "A")

# Perturbative validity guard
VALIDITY_THRESHOLD = float(os.getenv("HRZ_VALIDITY_THRESHOLD", "0.3"))
HARD_LIMIT = float(os.getenv("HRZ_HARD_LIMIT", "1.0"))

# Kernel series switch on |delta * z|
SERIES_THRESHOLD = float(os.getenv("HRZ_SERIES_THRESHOLD", "1e-4"))

# Sign classification tolerance for Z and D values
CLASSIFY_TOL = float(os.getenv("HRZ_CLASSIFY_TOL", "1e-12"))

# Oracle settings
MAX_STATES = int(float(os.getenv("HRZ_MAX_STATES", "2000000")))
TOL_TRUNCATION = float(os.getenv("HRZ_TOL_TRUNCATION", "1e-6"))
Z_STEPS = int(os.getenv("HRZ_Z_STEPS", "4"))


def _parse_dims(raw: str) -> Tuple[int, ...]:
    dims = tuple(int(part) for part in raw.split(","))
    if len(dims) != len(MODE_ORDER):
        raise ValueError(f"HRZ_DEFAULT_DIMS needs {len(MODE_ORDER)} entries, got {raw!r}")
    return dims


DEFAULT_DIMS = _parse_dims(os.getenv("HRZ_DEFAULT_DIMS", "5,5,6,6,5,5,5"))

# Sweep worker pool
THREADS = int(os.getenv("HRZ_THREADS", str(os.cpu_count() or 1)))

LOG_LEVEL = os.getenv("HRZ_LOG_LEVEL", "INFO").upper()

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
