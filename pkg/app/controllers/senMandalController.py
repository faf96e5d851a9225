"""
Sen-Mandal Coefficient Controller Module

This module evaluates the second-order perturbative solution of the
hyper-Raman waveguide coupled to two probes. Each scattered field is written
as

    a_X(z) = sum_i c_i(z) w_i

where w_i is a product of initial-time ladder operators and c_i a complex
coefficient. The Stokes, phonon and anti-Stokes tables hold 18, 20 and 18
entries. Every entry carries the global phase of its mode, exp(i z k_X), and
is assembled from the kernels in app.utils.phaseKernels.

Author: Sasank Tanikella
Created: 10-16-2026
"""

from typing import Dict, List, Tuple

import numpy as np

from app.controllers.modelController import derive_phases
from app.exceptions import ParameterException
from app.models import Mode
from app.schemas import CoefficientSet, SystemParams
from app.utils.ladderAlgebra import Term, parse_word
from app.utils.phaseKernels import linear_kernel, mixed_kernel, quadratic_kernel

# Operator words of the assumed solution, keyed by table index.
# "d" marks a creation operator; repeated letters are repeated factors.
STOKES_WORDS: Dict[int, str] = {
    1: "S",
    2: "L1 L2 Vd",
    3: "p1",
    4: "p2",
    5: "L1 L1 L2 L2 Ad",
    6: "L1 L1d Vd Vd A",
    7: "L2d L2 Vd Vd A",
    8: "p1 L2 Vd",
    9: "p2 L1 Vd",
    10: "L1",
    11: "L2",
    12: "A",
    13: "A",
    14: "L1 L1d L2 L2d S",
    15: "L1 L1d S V Vd",
    16: "L2d L2 S V Vd",
    17: "S",
    18: "S",
}

PHONON_WORDS: Dict[int, str] = {
    1: "V",
    2: "L1 L2 Sd",
    3: "L1d L2d A",
    4: "L1d L1 Sd Vd A",
    5: "L2d L2 Sd Vd A",
    6: "Sd Vd A",
    7: "p1 L2 Sd",
    8: "p2 L1 Sd",
    9: "p1d L1 L2",
    10: "p2d L1 L2",
    11: "p1d L2d A",
    12: "p2d L1d A",
    13: "p1 L1d L2d",
    14: "p2 L1d L2d",
    15: "L1 L1d L2 L2d V",
    16: "L1 L1d S Sd V",
    17: "L2d L2 S Sd V",
    18: "L1d L1 L2d L2 V",
    19: "L1d L1 V Ad A",
    20: "L2 L2d V Ad A",
}

ANTI_STOKES_WORDS: Dict[int, str] = {
    1: "A",
    2: "L1 L2 V",
    3: "p1",
    4: "p2",
    5: "L1 L1 L2 L2 Sd",
    6: "L1 L1d S V V",
    7: "L2d L2 S V V",
    8: "p1 L2 V",
    9: "p2 L1 V",
    10: "L1",
    11: "L2",
    12: "S",
    13: "S",
    14: "L1 L1d L2 L2d A",
    15: "L1 L1d Vd V A",
    16: "L2d L2 Vd V A",
    17: "A",
    18: "A",
}

# Coupling order of each entry: 0 for the free term, 1 for single-coupling terms
_FIRST_ORDER = {Mode.S: (2, 3, 4), Mode.V: (2, 3), Mode.A: (2, 3, 4)}


def _table(size: int) -> np.ndarray:
    table = np.zeros(size + 1, dtype=complex)
    table[0] = np.nan
    return table


def stokes_coefficients(params: SystemParams, z: float) -> np.ndarray:
    """
    Stokes table l[1..18] at propagation length z.

    Args:
        params (SystemParams): Configuration
        z (float): Propagation length

    Returns:
        np.ndarray: Complex array of length 19; index 0 unused
    """
    ph = derive_phases(params)
    g, chi = params.g, params.chi
    gam, lam, om = params.gamma_probe, params.lambda_probe, params.omega_probe
    dS, dA = ph.dk_S, ph.dk_A

    l = _table(18)
    l[1] = 1.0
    l[2] = g * linear_kernel(dS, z)
    for j in range(2):
        l[3 + j] = lam[j] * linear_kernel(ph.dk_Sj[j], z)
        l[8 + j] = g * gam[j] * mixed_kernel(dS, ph.dk_L[j], z)
        l[10 + j] = gam[j] * lam[j] * mixed_kernel(ph.dk_Sj[j], -ph.dk_L[j], z)
        l[12 + j] = lam[j] * om[j] * mixed_kernel(ph.dk_Sj[j], -ph.dk_Aj[j], z)
        l[17 + j] = lam[j] ** 2 * quadratic_kernel(ph.dk_Sj[j], z)
    l[5] = -g * chi * mixed_kernel(dS, -dA, z)
    l[6] = l[7] = g * chi * mixed_kernel(dS, dA, z)
    l[14] = -g * g * quadratic_kernel(dS, z)
    l[15] = l[16] = g * g * quadratic_kernel(dS, z)
    return l * np.exp(1j * z * params.k.S)


def phonon_coefficients(params: SystemParams, z: float) -> np.ndarray:
    """Phonon table m[1..20] at propagation length z (index 0 unused)."""
    ph = derive_phases(params)
    g, chi = params.g, params.chi
    gam, lam, om = params.gamma_probe, params.lambda_probe, params.omega_probe
    dS, dA = ph.dk_S, ph.dk_A

    m = _table(20)
    m[1] = 1.0
    m[2] = g * linear_kernel(dS, z)
    m[3] = chi * linear_kernel(dA, z)
    m[4] = m[5] = m[6] = g * chi * (mixed_kernel(dS, dA, z) - mixed_kernel(dA, dS, z))
    for j in range(2):
        m[7 + j] = g * gam[j] * mixed_kernel(dS, ph.dk_L[j], z)
        m[9 + j] = -g * lam[j] * mixed_kernel(dS, -ph.dk_Sj[j], z)
        m[11 + j] = -chi * gam[j] * mixed_kernel(dA, -ph.dk_L[j], z)
        m[13 + j] = chi * om[j] * mixed_kernel(dA, ph.dk_Aj[j], z)
    m[15] = -g * g * quadratic_kernel(dS, z)
    m[16] = m[17] = g * g * quadratic_kernel(dS, z)
    m[18] = chi * chi * quadratic_kernel(dA, z)
    m[19] = m[20] = -chi * chi * quadratic_kernel(dA, z)
    return m * np.exp(1j * z * params.k.V)


def antistokes_coefficients(params: SystemParams, z: float) -> np.ndarray:
    """Anti-Stokes table n[1..18] at propagation length z (index 0 unused)."""
    ph = derive_phases(params)
    g, chi = params.g, params.chi
    gam, lam, om = params.gamma_probe, params.lambda_probe, params.omega_probe
    dS, dA = ph.dk_S, ph.dk_A

    n = _table(18)
    n[1] = 1.0
    n[2] = chi * linear_kernel(-dA, z)
    for j in range(2):
        n[3 + j] = om[j] * linear_kernel(ph.dk_Aj[j], z)
        n[8 + j] = chi * gam[j] * mixed_kernel(-dA, ph.dk_L[j], z)
        n[10 + j] = gam[j] * om[j] * mixed_kernel(ph.dk_Aj[j], -ph.dk_L[j], z)
        n[12 + j] = lam[j] * om[j] * mixed_kernel(ph.dk_Aj[j], -ph.dk_Sj[j], z)
        n[17 + j] = om[j] ** 2 * quadratic_kernel(ph.dk_Aj[j], z)
    n[5] = g * chi * mixed_kernel(-dA, dS, z)
    n[6] = n[7] = g * chi * mixed_kernel(-dA, -dS, z)
    n[14] = n[15] = n[16] = chi * chi * quadratic_kernel(-dA, z)
    return n * np.exp(1j * z * params.k.A)


def coefficient_set(params: SystemParams, z: float) -> CoefficientSet:
    """Evaluates all three tables at once."""
    return CoefficientSet(
        z=z,
        l=stokes_coefficients(params, z),
        m=phonon_coefficients(params, z),
        n=antistokes_coefficients(params, z),
    )


_PARSED_WORDS: Dict[Mode, Dict[int, Tuple]] = {
    mode: {index: parse_word(text) for index, text in words.items()}
    for mode, words in ((Mode.S, STOKES_WORDS), (Mode.V, PHONON_WORDS), (Mode.A, ANTI_STOKES_WORDS))
}


def _evaluate(mode: Mode, params: SystemParams, z: float) -> np.ndarray:
    if mode == Mode.S:
        return stokes_coefficients(params, z)
    if mode == Mode.V:
        return phonon_coefficients(params, z)
    return antistokes_coefficients(params, z)


def coupling_order(mode: Mode, index: int) -> int:
    if index == 1:
        return 0
    return 1 if index in _FIRST_ORDER[mode] else 2


def field_expansion(params: SystemParams, z: float, mode: Mode) -> List[Term]:
    """
    Second-order operator solution of one scattered mode.

    Args:
        params (SystemParams): Configuration
        z (float): Propagation length
        mode (Mode): S, V or A

    Returns:
        List[Term]: (coupling order, coefficient, word) triples; entries with
        an exactly vanishing coefficient are dropped

    Raises:
        ParameterException.UnknownMode: mode is not a scattered mode
    """
    try:
        mode = Mode(mode)
        words = _PARSED_WORDS[mode]
    except (ValueError, KeyError):
        raise ParameterException.UnknownMode(f"no field expansion for mode {mode!r}")
    table = _evaluate(mode, params, z)
    return [
        (coupling_order(mode, index), complex(table[index]), word)
        for index, word in words.items()
        if table[index] != 0
    ]
