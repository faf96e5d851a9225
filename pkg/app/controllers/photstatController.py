"""
Photon Statistics Controller Module

This module computes the antibunching discriminants of the scattered modes:

    D_i  = <N_i^2> - <N_i>^2 - <N_i>         (single mode)
    D_ij = <N_i N_j> - <N_i><N_j>            (mode pairs)

Negative values signal antibunching. Closed forms are evaluated through the
phase kernels. A second-order moment engine assembles the same quantities
from the field expansions of the coefficient controller. It serves mean
numbers, g2 normalization and cross-checks of every closed form.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import logging
from typing import Dict, List, Tuple

import numpy as np

from app.controllers.modelController import apply_scenario, derive_phases, without_probes
from app.controllers.senMandalController import field_expansion
from app.controllers.zenoController import build_report
from app.exceptions import ParameterException, StatException
from app.models import Mode, ProbeScenario, StatClass
from app.schemas import StatReport, SystemParams, ZenoReport
from app.simulation_config import CLASSIFY_TOL, MODE_ORDER
from app.utils.ladderAlgebra import Term, dagger, expectation_by_order, multiply, truncated_product
from app.utils.phaseKernels import linear_kernel, mixed_kernel, quadratic_kernel

logger = logging.getLogger(__name__)

STAT_KEYS = ("S", "V", "A", "SV", "SA", "VA")


def _one_minus_cos(delta: float, z: float) -> float:
    """(1 - cos(delta z)) / delta**2, tending to z**2/2."""
    return -float(np.real(quadratic_kernel(delta, z)))


def d_single(params: SystemParams, z: float) -> Tuple[float, float, float]:
    """
    Single-mode discriminants.

    Args:
        params (SystemParams): Configuration
        z (float): Propagation length

    Returns:
        Tuple[float, float, float]: (D_S, D_V, D_A); D_A is identically 0

    Notes:
        - D_S = 4 g^2 (1 - cos dk_S z)/dk_S^2 |a_L1|^2 |a_L2|^2 |beta|^2
        - D_V collects the Stokes and anti-Stokes generation terms and their
          interference through K(dk_S, dk_A)
        - Probe couplings do not enter
    """
    ph = derive_phases(params)
    mag = params.magnitude
    pumps = mag("L1") ** 2 * mag("L2") ** 2
    n_L = mag("L1") ** 2 + mag("L2") ** 2 + 1.0
    b, gm, d = mag("S"), mag("V"), mag("A")
    g, chi = params.g, params.chi
    cos_S = _one_minus_cos(ph.dk_S, z)
    cos_A = _one_minus_cos(ph.dk_A, z)

    D_S = 4.0 * g * g * cos_S * pumps * b * b
    theta = ph.dtheta_S + ph.dtheta_A
    D_V = (
        4.0 * g * g * cos_S * pumps * gm * gm
        + 4.0 * chi * chi * cos_A * n_L * gm * gm * d * d
        + 4.0 * g * chi * n_L * b * gm * gm * d
        * float(np.real(mixed_kernel(ph.dk_S, ph.dk_A, z) * np.exp(-1j * theta)))
    )
    return float(D_S), float(D_V), 0.0


def d_pair(params: SystemParams, z: float) -> Tuple[float, float, float]:
    """
    Intermodal discriminants.

    Args:
        params (SystemParams): Configuration
        z (float): Propagation length

    Returns:
        Tuple[float, float, float]: (D_SV, D_SA, D_VA)

    Notes:
        - D_SV is the only statistic that depends on the probe couplings
          (through Gamma_j and Lambda_j)
        - D_SA = 2 g chi |a_L1|^2 |a_L2|^2 |beta| |delta|
          Re[K(-dk_A, dk_S) exp(-i(dtheta_S - dtheta_A))], regular at dk_S = dk_A
        - D_VA = -2 chi^2 (1 - cos dk_A z)/dk_A^2 (|a_L1|^2 + |a_L2|^2 + 1) |gamma|^2 |delta|^2
    """
    ph = derive_phases(params)
    mag = params.magnitude
    aL1, aL2 = mag("L1"), mag("L2")
    pumps = aL1 ** 2 * aL2 ** 2
    n_L = aL1 ** 2 + aL2 ** 2 + 1.0
    b, gm, d = mag("S"), mag("V"), mag("A")
    probes = (mag("p1"), mag("p2"))
    pump_of = (aL2, aL1)
    g, chi = params.g, params.chi
    E_S = linear_kernel(ph.dk_S, z)
    E_A = linear_kernel(ph.dk_A, z)
    cos_S = _one_minus_cos(ph.dk_S, z)

    D_SV = (
        2.0 * g * aL1 * aL2 * b * gm * np.real(E_S * np.exp(-1j * ph.dtheta_S))
        + 2.0 * g * g * cos_S * pumps * (2.0 * gm * gm + 2.0 * b * b + 1.0)
        - 2.0 * g * g * cos_S * n_L * b * b * gm * gm
        + 2.0 * g * chi * pumps * b * d
        * np.real(np.conj(E_S) * E_A * np.exp(1j * (ph.dtheta_S - ph.dtheta_A)))
        + 4.0 * g * chi * n_L * b * gm * gm * d
        * np.real(mixed_kernel(ph.dk_S, ph.dk_A, z) * np.exp(-1j * (ph.dtheta_S + ph.dtheta_A)))
    )
    for j in range(2):
        D_SV += (
            2.0 * g * params.lambda_probe[j] * probes[j] * aL1 * aL2 * gm
            * np.real(np.conj(E_S) * linear_kernel(ph.dk_Sj[j], z)
                      * np.exp(1j * (ph.dtheta_S - ph.dphi_S[j])))
        )
        D_SV += (
            2.0 * g * params.gamma_probe[j] * probes[j] * pump_of[j] * b * gm
            * np.real(mixed_kernel(ph.dk_S, ph.dk_L[j], z)
                      * np.exp(-1j * (ph.dtheta_S + ph.dphi_L[j])))
        )

    D_SA = (
        2.0 * g * chi * pumps * b * d
        * np.real(mixed_kernel(-ph.dk_A, ph.dk_S, z) * np.exp(-1j * (ph.dtheta_S - ph.dtheta_A)))
    )
    D_VA = -2.0 * chi * chi * _one_minus_cos(ph.dk_A, z) * n_L * gm * gm * d * d
    return float(D_SV), float(D_SA), float(D_VA)


def g2_normalize(D: float, n_i: float, n_j: float, tol: float = CLASSIFY_TOL) -> float:
    """
    Normalized second-order correlation 1 + D / (n_i n_j).

    Raises:
        StatException.DegenerateMean: a mean number is <= tol
    """
    if n_i <= tol or n_j <= tol:
        raise StatException.DegenerateMean(f"mean numbers {n_i:.3g}, {n_j:.3g} are too small")
    return 1.0 + D / (n_i * n_j)


def classify(value: float, tol: float = CLASSIFY_TOL) -> StatClass:
    if value < -tol:
        return StatClass.ANTIBUNCHED
    if value > tol:
        return StatClass.BUNCHED
    return StatClass.UNBUNCHED


# ---------------------------------------------------------------------------
# Second-order moment engine
# ---------------------------------------------------------------------------

def _alphas(params: SystemParams) -> List[complex]:
    return [params.amplitude(mode) for mode in MODE_ORDER]


def _scattered(mode) -> Mode:
    try:
        mode = Mode(mode)
    except ValueError:
        raise ParameterException.UnknownMode(f"unknown mode {mode!r}")
    if mode not in (Mode.S, Mode.V, Mode.A):
        raise ParameterException.UnknownMode(f"mode {mode.value} is not a scattered mode")
    return mode


def moment(params: SystemParams, z: float, terms: List[Term]) -> np.ndarray:
    """Coherent-state expectation of an operator polynomial, split by coupling order."""
    return expectation_by_order(terms, _alphas(params))


def mean_number(params: SystemParams, z: float, mode) -> float:
    """
    Second-order mean boson number of a scattered mode.

    Args:
        params (SystemParams): Configuration
        z (float): Propagation length
        mode: S, V or A

    Returns:
        float: <a^dagger a> truncated at second order in the couplings
    """
    a = field_expansion(params, z, _scattered(mode))
    return float(np.real(moment(params, z, multiply(dagger(a), a)).sum()))


def moment_d(params: SystemParams, z: float, key: str) -> float:
    """
    Discriminant assembled by the moment engine.

    Args:
        params (SystemParams): Configuration
        z (float): Propagation length
        key (str): One of S, V, A, SV, SA, VA

    Returns:
        float: <a_i^+ a_j^+ a_j a_i> - <a_i^+ a_i><a_j^+ a_j>, both sides
        truncated at second order (i = j for single modes)
    """
    if key not in STAT_KEYS:
        raise ParameterException.UnknownMode(f"unknown statistic {key!r}")
    first = _scattered(key[0])
    second = _scattered(key[-1])
    a_i = field_expansion(params, z, first)
    a_j = a_i if second == first else field_expansion(params, z, second)
    pair = multiply(a_j, a_i)
    correlated = moment(params, z, multiply(dagger(pair), pair)).sum()
    n_i = moment(params, z, multiply(dagger(a_i), a_i))
    n_j = moment(params, z, multiply(dagger(a_j), a_j))
    return float(np.real(correlated - truncated_product(n_i, n_j)))


def zeno_moments(params: SystemParams, z: float, scenario: ProbeScenario) -> ZenoReport:
    """Zeno parameters as mean-number differences from the moment engine."""
    probed = apply_scenario(params, scenario)
    free = without_probes(probed)
    values = {
        mode.value: mean_number(probed, z, mode) - mean_number(free, z, mode)
        for mode in (Mode.S, Mode.V, Mode.A)
    }
    return build_report(scenario, z, values, source="moments")


def stat_report(params: SystemParams, z: float, with_g2: bool = False,
                tol: float = CLASSIFY_TOL) -> StatReport:
    """
    Closed-form discriminants with classification and optional g2.

    Args:
        params (SystemParams): Configuration
        z (float): Propagation length
        with_g2 (bool): Normalize by moment-engine mean numbers
        tol (float): Classification tolerance

    Returns:
        StatReport: D per key; g2 omits keys whose mean numbers vanish
    """
    D_S, D_V, D_A = d_single(params, z)
    D_SV, D_SA, D_VA = d_pair(params, z)
    D = {"S": D_S, "V": D_V, "A": D_A, "SV": D_SV, "SA": D_SA, "VA": D_VA}

    g2 = None
    if with_g2:
        means = {mode: mean_number(params, z, mode) for mode in ("S", "V", "A")}
        g2 = {}
        for key, value in D.items():
            try:
                g2[key] = g2_normalize(value, means[key[0]], means[key[-1]], tol)
            except StatException.DegenerateMean:
                logger.info("skipping g2 for %s: degenerate mean number", key)

    return StatReport(
        z=z,
        D=D,
        g2=g2,
        classification={key: classify(value, tol) for key, value in D.items()},
        tol=tol,
    )
