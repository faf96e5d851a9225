"""
Zeno Controller Module

This module computes Zeno parameters, the probe-induced change of the mean
boson number of the Stokes, phonon and anti-Stokes modes. Z < 0 signals the
quantum Zeno effect and Z > 0 the anti-Zeno effect. It provides the general
coefficient-product evaluator, the closed forms of the four probe scenarios
with their phase-matched limits, the constrained special-mismatch form and a
transition (sign change) finder.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import bisect, minimize_scalar

from app.controllers.modelController import (
    apply_axis, apply_scenario, check_validity, derive_phases,
    impose_special_mismatch, partner
)
from app.controllers.senMandalController import coefficient_set
from app.models import ProbeScenario, SweepAxisName, ZenoClass
from app.schemas import CaseIStrengths, ProbeStrengths, SystemParams, ZenoReport
from app.simulation_config import CLASSIFY_TOL
from app.utils.phaseKernels import mixed_kernel, sinc_squared_half

logger = logging.getLogger(__name__)

# Components each scenario reports; the probed mode is not applicable
APPLICABLE: Dict[ProbeScenario, Tuple[str, ...]] = {
    ProbeScenario.PUMP_PROBE: ("S", "V", "A"),
    ProbeScenario.STOKES_PROBE: ("V", "A"),
    ProbeScenario.ANTI_STOKES_PROBE: ("S", "V"),
    ProbeScenario.SPLIT_PROBE: ("V",),
    ProbeScenario.GENERAL: ("S", "V", "A"),
}


def classify(value: Optional[float], tol: float = CLASSIFY_TOL) -> ZenoClass:
    if value is None:
        return ZenoClass.NOT_APPLICABLE
    if value < -tol:
        return ZenoClass.QZE
    if value > tol:
        return ZenoClass.QAZE
    return ZenoClass.NEUTRAL


def build_report(
    scenario: ProbeScenario,
    z: float,
    values: Dict[str, Optional[float]],
    tol: float = CLASSIFY_TOL,
    residue: float = 0.0,
    source: str = "analytic",
) -> ZenoReport:
    """Wraps Z values into a report, blanking components the scenario probes."""
    scenario = ProbeScenario(scenario)
    keep = APPLICABLE[scenario]
    Z = {key: (float(values[key]) if key in keep and values.get(key) is not None else None)
         for key in ("S", "V", "A")}
    return ZenoReport(
        scenario=scenario,
        z=z,
        Z=Z,
        classification={key: classify(value, tol) for key, value in Z.items()},
        tol=tol,
        residue=residue,
        source=source,
    )


def _amplitudes(params: SystemParams) -> Tuple[complex, ...]:
    return tuple(params.amplitude(mode) for mode in ("p1", "p2", "L1", "L2", "S", "V", "A"))


def general_values(params: SystemParams, z: float) -> Tuple[Dict[str, float], float]:
    """
    Coefficient-product Zeno parameters for all three scattered modes.

    Args:
        params (SystemParams): Configuration (any couplings)
        z (float): Propagation length

    Returns:
        Tuple[Dict[str, float], float]: Z values keyed S, V, A and the largest
        imaginary residue of the symmetrized sums

    Notes:
        - Each "+ c.c." cross term is added together with its conjugate; the
          imaginary part of the sum is kept as a numerical check
    """
    cs = coefficient_set(params, z)
    l, m, n = cs.l, cs.m, cs.n
    ap1, ap2, aL1, aL2, b, gm, d = _amplitudes(params)
    c = np.conj

    cross_S = (
        l[1] * c(l[3]) * c(ap1) * b
        + l[1] * c(l[4]) * c(ap2) * b
        + l[1] * c(l[8]) * c(ap1) * c(aL2) * b * gm
        + l[1] * c(l[9]) * c(ap2) * c(aL1) * b * gm
        + l[1] * c(l[10]) * c(aL1) * b
        + l[1] * c(l[11]) * c(aL2) * b
        + l[1] * c(l[12]) * b * c(d)
        + l[1] * c(l[13]) * b * c(d)
        + l[1] * c(l[17]) * abs(b) ** 2
        + l[1] * c(l[18]) * abs(b) ** 2
        + l[2] * c(l[3]) * c(ap1) * aL1 * aL2 * c(gm)
        + l[2] * c(l[4]) * c(ap2) * aL1 * aL2 * c(gm)
        + l[3] * c(l[4]) * ap1 * c(ap2)
    )
    total_S = abs(l[3]) ** 2 * abs(ap1) ** 2 + abs(l[4]) ** 2 * abs(ap2) ** 2 + cross_S + c(cross_S)

    cross_V = (
        m[1] * c(m[7]) * c(ap1) * c(aL2) * b * gm
        + m[1] * c(m[8]) * c(ap2) * c(aL1) * b * gm
        + m[1] * c(m[9]) * ap1 * c(aL1) * c(aL2) * gm
        + m[1] * c(m[10]) * ap2 * c(aL1) * c(aL2) * gm
        + m[1] * c(m[11]) * ap1 * aL2 * gm * c(d)
        + m[1] * c(m[12]) * ap2 * aL1 * gm * c(d)
        + m[1] * c(m[13]) * c(ap1) * aL1 * aL2 * gm
        + m[1] * c(m[14]) * c(ap2) * aL1 * aL2 * gm
    )
    total_V = cross_V + c(cross_V)

    cross_A = (
        n[1] * c(n[3]) * c(ap1) * d
        + n[1] * c(n[4]) * c(ap2) * d
        + n[1] * c(n[8]) * c(ap1) * c(aL2) * c(gm) * d
        + n[1] * c(n[9]) * c(ap2) * c(aL1) * c(gm) * d
        + n[1] * c(n[10]) * c(aL1) * d
        + n[1] * c(n[11]) * c(aL2) * d
        + n[1] * c(n[12]) * c(b) * d
        + n[1] * c(n[13]) * c(b) * d
        + n[1] * c(n[17]) * abs(d) ** 2
        + n[1] * c(n[18]) * abs(d) ** 2
        + n[2] * c(n[3]) * c(ap1) * aL1 * aL2 * gm
        + n[2] * c(n[4]) * c(ap2) * aL1 * aL2 * gm
        + n[3] * c(n[4]) * ap1 * c(ap2)
    )
    total_A = abs(n[3]) ** 2 * abs(ap1) ** 2 + abs(n[4]) ** 2 * abs(ap2) ** 2 + cross_A + c(cross_A)

    totals = {"S": complex(total_S), "V": complex(total_V), "A": complex(total_A)}
    residue = max(abs(value.imag) for value in totals.values())
    return {key: value.real for key, value in totals.items()}, residue


def zeno_general(params: SystemParams, z: float, tol: float = CLASSIFY_TOL) -> ZenoReport:
    """
    General Zeno evaluator from coefficient cross products.

    Args:
        params (SystemParams): Configuration (all couplings free)
        z (float): Propagation length
        tol (float): Classification tolerance

    Returns:
        ZenoReport: Scenario General with Z_S, Z_V, Z_A
    """
    check_validity(params, z)
    values, residue = general_values(params, z)
    scale = max(1.0, max(abs(v) for v in values.values()))
    if residue > 1e-10 * scale:
        logger.warning("Zeno imaginary residue %.3g exceeds tolerance", residue)
    return build_report(ProbeScenario.GENERAL, z, values, tol, residue, source="general")


def case1_strengths(params: SystemParams) -> CaseIStrengths:
    """
    Pump-probe strengths C_j and D_j.

    D_j is evaluated directly as 4 chi Gamma_j |a_pj| |a_L(j+1)| |gamma| |delta|
    so it stays finite when g or beta vanish.
    """
    mag = params.magnitude
    pumps = (mag("L1"), mag("L2"))
    probes = (mag("p1"), mag("p2"))
    C = tuple(
        4.0 * params.g * params.gamma_probe[j] * probes[j] * pumps[partner(j)] * mag("S") * mag("V")
        for j in range(2)
    )
    D = tuple(
        4.0 * params.chi * params.gamma_probe[j] * probes[j] * pumps[partner(j)] * mag("V") * mag("A")
        for j in range(2)
    )
    return CaseIStrengths(C=C, D=D)


def probe_strengths(params: SystemParams) -> ProbeStrengths:
    """Stokes-probe strengths CS_j and anti-Stokes-probe strengths DA_j."""
    mag = params.magnitude
    common = mag("L1") * mag("L2") * mag("V")
    probes = (mag("p1"), mag("p2"))
    return ProbeStrengths(
        CS=tuple(4.0 * params.g * params.lambda_probe[j] * probes[j] * common for j in range(2)),
        DA=tuple(4.0 * params.chi * params.omega_probe[j] * probes[j] * common for j in range(2)),
    )


def stokes_term(dk_S: float, dk_L: float, phase: float, z: float) -> float:
    """
    Unit-strength Stokes kernel of the pump-probe case.

    Equal to the two-cosine-difference expression
    [dS/2 (cos(p + dS z + dL z) - cos(p + dS z)) - dL/2 (cos(p + dS z) - cos p)]
    / (dS (dS + dL) dL), evaluated through K so every limit is regular.
    """
    return 0.5 * float(np.real(np.conj(mixed_kernel(dk_S, dk_L, z)) * np.exp(1j * phase)))


def anti_stokes_term(dk_A: float, dk_L: float, phase: float, z: float) -> float:
    """Unit-strength anti-Stokes kernel of the pump-probe case."""
    return 0.5 * float(np.real(mixed_kernel(-dk_A, dk_L, z) * np.exp(1j * phase)))


def _case1_values(params: SystemParams, z: float) -> Dict[str, float]:
    ph = derive_phases(params)
    st = case1_strengths(params)
    Z_S = sum(
        st.C[j] * stokes_term(ph.dk_S, ph.dk_L[j], ph.dtheta_S + ph.dphi_L[j], z)
        for j in range(2)
    )
    Z_A = sum(
        st.D[j] * anti_stokes_term(ph.dk_A, ph.dk_L[j], ph.dtheta_A - ph.dphi_L[j], z)
        for j in range(2)
    )
    return {"S": Z_S, "V": Z_S - Z_A, "A": Z_A}


def zeno_case1(params: SystemParams, z: float, tol: float = CLASSIFY_TOL) -> ZenoReport:
    """
    Pump-probe closed form.

    Args:
        params (SystemParams): Configuration; Lambda and Omega are ignored
        z (float): Propagation length
        tol (float): Classification tolerance

    Returns:
        ZenoReport: Z_S, Z_A and Z_V = Z_S - Z_A
    """
    params = apply_scenario(params, ProbeScenario.PUMP_PROBE)
    check_validity(params, z)
    return build_report(ProbeScenario.PUMP_PROBE, z, _case1_values(params, z), tol)


def zeno_case1_special_mismatch(params: SystemParams, z: float, tol: float = CLASSIFY_TOL) -> ZenoReport:
    """
    Pump-probe case under dk_S z = -dk_A z = dk_Lj z.

    Only dk_S is read from params; the constraint is imposed internally.
    Z_S = -1/4 sum_j C_j z^2 cos(dk_S z + dtheta_S + dphi_Lj) sinc^2(dk_S z / 2)
    and Z_A analogously with D_j and cos(dk_S z - dtheta_A + dphi_Lj).
    """
    params = apply_scenario(params, ProbeScenario.PUMP_PROBE)
    check_validity(params, z)
    ph = derive_phases(params)
    st = case1_strengths(params)
    x = ph.dk_S * z
    envelope = -0.25 * z * z * sinc_squared_half(x)
    Z_S = sum(st.C[j] * envelope * np.cos(x + ph.dtheta_S + ph.dphi_L[j]) for j in range(2))
    Z_A = sum(st.D[j] * envelope * np.cos(x - ph.dtheta_A + ph.dphi_L[j]) for j in range(2))
    values = {"S": float(Z_S), "V": float(Z_S - Z_A), "A": float(Z_A)}
    return build_report(ProbeScenario.PUMP_PROBE, z, values, tol, source="special-mismatch")


def _stokes_probe_term(params: SystemParams, z: float, j: int) -> float:
    ph = derive_phases(params)
    strength = probe_strengths(params).CS[j]
    return -strength * stokes_term(ph.dk_S, -ph.dk_Sj[j], ph.dtheta_S - ph.dphi_S[j], z)


def _anti_stokes_probe_term(params: SystemParams, z: float, j: int) -> float:
    ph = derive_phases(params)
    strength = probe_strengths(params).DA[j]
    phase = ph.dtheta_A + ph.dphi_A[j]
    return strength * 0.5 * float(np.real(np.conj(mixed_kernel(ph.dk_A, ph.dk_Aj[j], z)) * np.exp(1j * phase)))


def zeno_case2(params: SystemParams, z: float, tol: float = CLASSIFY_TOL) -> ZenoReport:
    """
    Stokes-probe closed form.

    Z_V = -sum_j CS_j * stokes_term(dk_S, -dk_Sj, dtheta_S - dphi_Sj); Z_A = 0;
    Z_S is not applicable.
    """
    params = apply_scenario(params, ProbeScenario.STOKES_PROBE)
    check_validity(params, z)
    Z_V = sum(_stokes_probe_term(params, z, j) for j in range(2))
    return build_report(ProbeScenario.STOKES_PROBE, z, {"V": Z_V, "A": 0.0}, tol)


def zeno_case3(params: SystemParams, z: float, tol: float = CLASSIFY_TOL) -> ZenoReport:
    """Anti-Stokes-probe closed form: Z_V from DA_j, Z_S = 0, Z_A not applicable."""
    params = apply_scenario(params, ProbeScenario.ANTI_STOKES_PROBE)
    check_validity(params, z)
    Z_V = sum(_anti_stokes_probe_term(params, z, j) for j in range(2))
    return build_report(ProbeScenario.ANTI_STOKES_PROBE, z, {"S": 0.0, "V": Z_V}, tol)


def zeno_case4(params: SystemParams, z: float, tol: float = CLASSIFY_TOL) -> ZenoReport:
    """Split-probe closed form: Stokes-probe term of probe 1 plus anti-Stokes-probe term of probe 2."""
    params = apply_scenario(params, ProbeScenario.SPLIT_PROBE)
    check_validity(params, z)
    Z_V = _stokes_probe_term(params, z, 0) + _anti_stokes_probe_term(params, z, 1)
    return build_report(ProbeScenario.SPLIT_PROBE, z, {"V": Z_V}, tol)


CASE_EVALUATORS: Dict[ProbeScenario, Callable[..., ZenoReport]] = {
    ProbeScenario.PUMP_PROBE: zeno_case1,
    ProbeScenario.STOKES_PROBE: zeno_case2,
    ProbeScenario.ANTI_STOKES_PROBE: zeno_case3,
    ProbeScenario.SPLIT_PROBE: zeno_case4,
    ProbeScenario.GENERAL: zeno_general,
}


def zeno_for_scenario(params: SystemParams, z: float, scenario: ProbeScenario,
                      tol: float = CLASSIFY_TOL) -> ZenoReport:
    """Dispatches to the closed form of a scenario (General uses the cross products)."""
    return CASE_EVALUATORS[ProbeScenario(scenario)](params, z, tol)


def phase_matched_case1(params: SystemParams, z: float) -> Dict[str, float]:
    """Phase-matched pump-probe limits: -1/4 sum C_j z^2 cos(dtheta_S + dphi_Lj) and the anti-Stokes analogue."""
    ph = derive_phases(params)
    st = case1_strengths(params)
    Z_S = -0.25 * z * z * sum(st.C[j] * np.cos(ph.dtheta_S + ph.dphi_L[j]) for j in range(2))
    Z_A = -0.25 * z * z * sum(st.D[j] * np.cos(ph.dtheta_A - ph.dphi_L[j]) for j in range(2))
    return {"S": float(Z_S), "V": float(Z_S - Z_A), "A": float(Z_A)}


def phase_matched_case2(params: SystemParams, z: float) -> Dict[str, float]:
    """Phase-matched Stokes-probe limit: +1/4 sum CS_j z^2 cos(dtheta_S - dphi_Sj)."""
    ph = derive_phases(params)
    CS = probe_strengths(params).CS
    Z_V = 0.25 * z * z * sum(CS[j] * np.cos(ph.dtheta_S - ph.dphi_S[j]) for j in range(2))
    return {"V": float(Z_V), "A": 0.0}


def phase_matched_case3(params: SystemParams, z: float) -> Dict[str, float]:
    """Phase-matched anti-Stokes-probe limit: -1/4 sum DA_j z^2 cos(dtheta_A + dphi_Aj)."""
    ph = derive_phases(params)
    DA = probe_strengths(params).DA
    Z_V = -0.25 * z * z * sum(DA[j] * np.cos(ph.dtheta_A + ph.dphi_A[j]) for j in range(2))
    return {"S": 0.0, "V": float(Z_V)}


def phase_matched_case4(params: SystemParams, z: float) -> Dict[str, float]:
    ph = derive_phases(params)
    st = probe_strengths(params)
    Z_V = 0.25 * z * z * (
        st.CS[0] * np.cos(ph.dtheta_S - ph.dphi_S[0])
        - st.DA[1] * np.cos(ph.dtheta_A + ph.dphi_A[1])
    )
    return {"V": float(Z_V)}


PHASE_MATCHED = {
    ProbeScenario.PUMP_PROBE: phase_matched_case1,
    ProbeScenario.STOKES_PROBE: phase_matched_case2,
    ProbeScenario.ANTI_STOKES_PROBE: phase_matched_case3,
    ProbeScenario.SPLIT_PROBE: phase_matched_case4,
}


def find_transition(
    params: SystemParams,
    z: float,
    axis: SweepAxisName,
    value_range: Tuple[float, float],
    component: str = "S",
    scenario: ProbeScenario = ProbeScenario.PUMP_PROBE,
    special_mismatch: bool = False,
    count: int = 2001,
    touching: bool = False,
) -> List[float]:
    """
    Locates QZE/QAZE transitions of one Zeno component along an axis.

    Args:
        params (SystemParams): Base configuration
        z (float): Propagation length
        axis (SweepAxisName): Swept quantity
        value_range (Tuple[float, float]): Closed scan interval
        component (str): "S", "V" or "A"
        scenario (ProbeScenario): Closed form to evaluate
        special_mismatch (bool): Evaluate the constrained special-mismatch
            form (the mismatch constraint is re-imposed at every point)
        count (int): Scan grid size
        touching (bool): Also report zeros where the curve touches 0
            without changing sign

    Returns:
        List[float]: Sorted axis values, each refined to 1e-6 absolute;
        empty when the component keeps its sign

    Notes:
        - Sign changes are bracketed on the grid and refined with
          scipy.optimize.bisect
        - Touching zeros are local minima of |Z| whose bounded minimum is
          below 1e-9 of the curve scale
    """
    axis = SweepAxisName(axis)

    def evaluate(value: float) -> float:
        point = apply_axis(params, axis, value, z)
        if special_mismatch:
            point = impose_special_mismatch(point)
            report = zeno_case1_special_mismatch(point, z)
        else:
            report = zeno_for_scenario(point, z, scenario)
        result = report.Z[component]
        if result is None:
            raise ValueError(f"component {component} is not reported for {scenario}")
        return result

    grid = np.linspace(value_range[0], value_range[1], count)
    samples = np.array([evaluate(value) for value in grid])
    scale = float(np.max(np.abs(samples))) if samples.size else 0.0
    roots: List[float] = []

    for i in range(count - 1):
        left, right = samples[i], samples[i + 1]
        if left == 0.0:
            if 0 < i and samples[i - 1] * right < 0:
                roots.append(float(grid[i]))
            continue
        if left * right < 0:
            roots.append(float(bisect(evaluate, grid[i], grid[i + 1], xtol=1e-6)))

    if touching and scale > 0.0:
        magnitudes = np.abs(samples)
        for i in range(1, count - 1):
            is_dip = magnitudes[i] <= magnitudes[i - 1] and magnitudes[i] <= magnitudes[i + 1]
            if not is_dip or samples[i - 1] * samples[i + 1] < 0:
                continue
            best = minimize_scalar(
                lambda value: abs(evaluate(value)),
                bounds=(grid[i - 1], grid[i + 1]),
                method="bounded",
                options={"xatol": 1e-7},
            )
            if best.fun <= 1e-9 * scale:
                roots.append(float(best.x))

    roots = sorted(roots)
    merged: List[float] = []
    for root in roots:
        if not merged or root - merged[-1] > 1e-5:
            merged.append(root)
    logger.info("found %d transition(s) of Z_%s along %s", len(merged), component, axis.value)
    return merged
