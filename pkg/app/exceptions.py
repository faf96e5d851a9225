"""
Custom Exception Classes Module

This module defines the error types raised by the analytic engine, the
Fock-space oracle and the command-line front end. Every error carries the
process exit code the CLI reports for it.

Author: Sasank Tanikella
Created: 10-16-2026
"""

from typing import Optional


class HyperRamanError(Exception):
    """
    Base class for all domain errors.

    Attributes:
        exit_code (int): Process exit code used by the CLI
        detail (str): Default human readable message
    """
    exit_code = 1
    detail = "Hyper-Raman toolkit error"

    def __init__(self, detail: Optional[str] = None):
        self.detail = detail or self.detail
        super().__init__(self.detail)


class ParameterException:
    """
    Parameter-file and schema errors.

    Raised when a parameter set, override or mode name cannot be
    interpreted.
    """
    class InvalidInput(HyperRamanError):
        exit_code = 2
        detail = "Invalid parameter data"

    class UnknownMode(HyperRamanError):
        exit_code = 2
        detail = "Unknown mode name"


class ValidityException:
    """
    Perturbative validity errors.

    The warning threshold only logs; the hard limit aborts CLI runs.
    """
    class HardViolation(HyperRamanError):
        exit_code = 3
        detail = "Coupling times propagation length exceeds the hard validity limit"


class StatException:
    """Photon-statistics errors."""
    class DegenerateMean(HyperRamanError):
        exit_code = 1
        detail = "Mean boson number too small to normalize g2"


class FockException:
    """
    Truncated Fock-space oracle errors.

    Covers basis budgets, the coherent occupancy guard and evolution
    failures.
    """
    class BudgetExceeded(HyperRamanError):
        exit_code = 2
        detail = "Truncated basis exceeds the configured state budget"

    class OccupancyGuard(HyperRamanError):
        exit_code = 2
        detail = "Coherent amplitude too large for the truncation dimension"

    class NonConvergence(HyperRamanError):
        exit_code = 1
        detail = "State evolution did not converge"


class SweepException:
    """Sweep specification and figure preset errors."""
    class InvalidAxis(HyperRamanError):
        exit_code = 2
        detail = "Invalid sweep axis"

    class UnknownPreset(HyperRamanError):
        exit_code = 2
        detail = "Unknown figure preset"


class ValidationException:
    """Raised when the validation suite reports failed checks."""
    class ChecksFailed(HyperRamanError):
        exit_code = 1
        detail = "Validation checks failed"
