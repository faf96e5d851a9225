"""
Model Controller Module

This module owns the parameter-level operations: derived mismatch and phase
quantities, probe-scenario restriction, the perturbative validity guard and
the mapping from dimensionless sweep axes back onto SystemParams.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import logging
from typing import Dict, Tuple

from app.exceptions import SweepException, ValidityException
from app.models import ProbeScenario, SweepAxisName
from app.schemas import DerivedPhases, ModeAmplitude, SystemParams, canonical_phase
from app.simulation_config import HARD_LIMIT, VALIDITY_THRESHOLD

logger = logging.getLogger(__name__)

# Couplings each scenario keeps; everything else is zeroed
_SCENARIO_KEEPS: Dict[ProbeScenario, Tuple[str, ...]] = {
    ProbeScenario.PUMP_PROBE: ("Gamma1", "Gamma2"),
    ProbeScenario.STOKES_PROBE: ("Lambda1", "Lambda2"),
    ProbeScenario.ANTI_STOKES_PROBE: ("Omega1", "Omega2"),
    ProbeScenario.SPLIT_PROBE: ("Lambda1", "Omega2"),
}

PROBE_COUPLINGS = ("Gamma1", "Gamma2", "Lambda1", "Lambda2", "Omega1", "Omega2")


def partner(j: int) -> int:
    """Index of the other probe (0-based)."""
    return 1 - j


def derive_phases(params: SystemParams) -> DerivedPhases:
    """
    Computes every phase mismatch and phase difference of a configuration.

    Args:
        params (SystemParams): Configuration

    Returns:
        DerivedPhases: Mismatches (inverse length) and phase differences (rad)
    """
    k = params.k
    amp = params.amp
    kp = (k.p1, k.p2)
    kL = (k.L1, k.L2)
    php = (amp.p1.phase, amp.p2.phase)
    phL = (amp.L1.phase, amp.L2.phase)
    return DerivedPhases(
        dk_S=k.S + k.V - k.L1 - k.L2,
        dk_A=k.L1 + k.L2 + k.V - k.A,
        dk_L=(kL[0] - kp[0], kL[1] - kp[1]),
        dk_Sj=(k.S - kp[0], k.S - kp[1]),
        dk_Aj=(k.A - kp[0], k.A - kp[1]),
        dtheta_S=amp.S.phase + amp.V.phase - amp.L1.phase - amp.L2.phase,
        dtheta_A=amp.L1.phase + amp.L2.phase + amp.V.phase - amp.A.phase,
        dphi_L=(phL[0] - php[0], phL[1] - php[1]),
        dphi_S=(amp.S.phase - php[0], amp.S.phase - php[1]),
        dphi_A=(amp.A.phase - php[0], amp.A.phase - php[1]),
    )


def apply_scenario(params: SystemParams, scenario: ProbeScenario) -> SystemParams:
    """
    Restricts the probe couplings to those a scenario allows.

    Args:
        params (SystemParams): Configuration
        scenario (ProbeScenario): Target scenario

    Returns:
        SystemParams: Copy with forbidden couplings set to exactly 0;
        General returns params unchanged
    """
    scenario = ProbeScenario(scenario)
    if scenario == ProbeScenario.GENERAL:
        return params
    keeps = _SCENARIO_KEEPS[scenario]
    return params.model_copy(update={name: 0.0 for name in PROBE_COUPLINGS if name not in keeps})


def without_probes(params: SystemParams) -> SystemParams:
    """Copy with every probe coupling zeroed (the unprobed reference)."""
    return params.model_copy(update={name: 0.0 for name in PROBE_COUPLINGS})


def check_validity(params: SystemParams, z: float, strict: bool = False) -> float:
    """
    Perturbative validity guard.

    Args:
        params (SystemParams): Configuration
        z (float): Propagation length
        strict (bool): Raise above the hard limit instead of only warning

    Returns:
        float: max |coupling * z|

    Raises:
        ValidityException.HardViolation: strict and above the hard limit
    """
    worst = max(abs(value * z) for value in params.couplings().values())
    if strict and worst > HARD_LIMIT:
        raise ValidityException.HardViolation(
            f"max |coupling*z| = {worst:.4g} exceeds the hard limit {HARD_LIMIT:g}"
        )
    if worst > VALIDITY_THRESHOLD:
        logger.warning(
            "max |coupling*z| = %.4g exceeds %.3g; second-order results are unreliable",
            worst, VALIDITY_THRESHOLD
        )
    return worst


def _shift_k(params: SystemParams, updates: Dict[str, float]) -> SystemParams:
    k = params.k.model_copy(update={m: params.k.get(m) + d for m, d in updates.items()})
    return params.model_copy(update={"k": k})


def _shift_phase(params: SystemParams, updates: Dict[str, float]) -> SystemParams:
    amp = params.amp
    fields = {}
    for mode, shift in updates.items():
        current = amp.get(mode)
        fields[mode] = ModeAmplitude(mag=current.mag, phase=canonical_phase(current.phase + shift))
    return params.model_copy(update={"amp": amp.model_copy(update=fields)})


def apply_axis(params: SystemParams, axis: SweepAxisName, value: float, z: float) -> SystemParams:
    """
    Realises a dimensionless axis value on the underlying configuration.

    Args:
        params (SystemParams): Base configuration
        axis (SweepAxisName): Axis to set
        value (float): Target value of the axis quantity
        z (float): Propagation length, needed by the ``*_z`` axes

    Returns:
        SystemParams: Configuration whose derived quantity equals value

    Raises:
        SweepException.InvalidAxis: axis needs z > 0 or g > 0 and it is 0

    Notes:
        - Mismatch axes shift k_S, k_A or both k_pj; probe mismatches that
          share the shifted wavevector move with it
        - Phase axes shift phi_S, phi_A or both probe phases
    """
    axis = SweepAxisName(axis)
    ph = derive_phases(params)

    if axis.value.startswith("dk_"):
        if axis.value.endswith("_z"):
            if z == 0.0:
                raise SweepException.InvalidAxis(f"{axis.value} needs z > 0")
            target = value / z
        else:
            if params.g <= 0.0:
                raise SweepException.InvalidAxis(f"{axis.value} needs g > 0")
            target = value * params.g
        if axis in (SweepAxisName.DK_S_Z, SweepAxisName.DK_S_G):
            return _shift_k(params, {"S": target - ph.dk_S})
        if axis in (SweepAxisName.DK_A_Z, SweepAxisName.DK_A_G):
            return _shift_k(params, {"A": -(target - ph.dk_A)})
        return _shift_k(params, {"p1": -(target - ph.dk_L[0]), "p2": -(target - ph.dk_L[1])})

    if axis == SweepAxisName.DTHETA_S:
        return _shift_phase(params, {"S": value - ph.dtheta_S})
    if axis == SweepAxisName.DTHETA_A:
        return _shift_phase(params, {"A": -(value - ph.dtheta_A)})
    if axis == SweepAxisName.DTHETA:
        return _shift_phase(params, {"S": value - ph.dtheta_S, "A": -(value - ph.dtheta_A)})

    probe_sources = {
        SweepAxisName.DPHI_L: ph.dphi_L,
        SweepAxisName.DPHI_L1: ph.dphi_L,
        SweepAxisName.DPHI_L2: ph.dphi_L,
        SweepAxisName.DPHI_S: ph.dphi_S,
        SweepAxisName.DPHI_A: ph.dphi_A,
    }
    current = probe_sources[axis]
    probes = {SweepAxisName.DPHI_L1: (0,), SweepAxisName.DPHI_L2: (1,)}.get(axis, (0, 1))
    return _shift_phase(params, {f"p{j + 1}": -(value - current[j]) for j in probes})


def impose_special_mismatch(params: SystemParams) -> SystemParams:
    """
    Enforces dk_A = -dk_S and dk_Lj = dk_S, keeping dk_S.

    The constraint corresponds to phonon dispersion 2 k_V = k_A - k_S.
    """
    ph = derive_phases(params)
    return _shift_k(params, {
        "A": ph.dk_A + ph.dk_S,
        "p1": ph.dk_L[0] - ph.dk_S,
        "p2": ph.dk_L[1] - ph.dk_S,
    })


def swap_probes(params: SystemParams) -> SystemParams:
    """Exchanges probe 1 and probe 2 together with their pumps."""
    amp = params.amp.model_copy(update={
        "p1": params.amp.p2, "p2": params.amp.p1,
        "L1": params.amp.L2, "L2": params.amp.L1,
    })
    k = params.k.model_copy(update={
        "p1": params.k.p2, "p2": params.k.p1,
        "L1": params.k.L2, "L2": params.k.L1,
    })
    return params.model_copy(update={
        "Gamma1": params.Gamma2, "Gamma2": params.Gamma1,
        "Lambda1": params.Lambda2, "Lambda2": params.Lambda1,
        "Omega1": params.Omega2, "Omega2": params.Omega1,
        "amp": amp, "k": k,
    })
