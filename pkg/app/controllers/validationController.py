"""
Validation Controller Module

This module runs the self-check suite behind ``hrzeno validate``. The fast
level exercises analytic identities over seeded random parameter draws; the
full level adds comparisons against the truncated Fock-space oracle.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import logging
from typing import Callable, Dict, List, Optional

import numpy as np

from app.controllers import fockOracleController as oracle
from app.controllers.modelController import apply_scenario, swap_probes
from app.controllers.photstatController import d_pair, d_single, moment_d, zeno_moments
from app.controllers.zenoController import (
    APPLICABLE, PHASE_MATCHED, case1_strengths, general_values, probe_strengths, zeno_case1,
    zeno_case1_special_mismatch, zeno_for_scenario
)
from app.models import ProbeScenario
from app.schemas import FockConfig, ModeAmplitude, ModeAmplitudes, ModeValues, SystemParams, ValidationCheck, ValidationReport
from app.simulation_config import MODE_ORDER, SERIES_THRESHOLD
from app.utils.phaseKernels import linear_kernel, mixed_kernel, quadratic_kernel

logger = logging.getLogger(__name__)

CASES = (
    ProbeScenario.PUMP_PROBE,
    ProbeScenario.STOKES_PROBE,
    ProbeScenario.ANTI_STOKES_PROBE,
    ProbeScenario.SPLIT_PROBE,
)
COUPLINGS = ("g", "chi", "Gamma1", "Gamma2", "Lambda1", "Lambda2", "Omega1", "Omega2")
PROBE_NAMES = ("Gamma1", "Gamma2", "Lambda1", "Lambda2", "Omega1", "Omega2")

# Wavevector offset used to approach phase matching
LIMIT_NUDGE = 1e-8


def random_params(rng: np.random.Generator, max_kz: float = 0.1, z: float = 1.0,
                  max_amplitude: float = 3.0, max_k: float = 5.0) -> SystemParams:
    """
    Draws a random configuration.

    Couplings are uniform in [0, max_kz / z], amplitudes uniform in
    [0, max_amplitude] with uniform phases, wavevectors uniform in
    [-max_k, max_k].
    """
    couplings = {name: float(rng.uniform(0.0, max_kz / z)) for name in COUPLINGS}
    amp = ModeAmplitudes(**{
        mode: ModeAmplitude(mag=float(rng.uniform(0.0, max_amplitude)),
                            phase=float(rng.uniform(-np.pi, np.pi)))
        for mode in MODE_ORDER
    })
    k = ModeValues(**{mode: float(rng.uniform(-max_k, max_k)) for mode in MODE_ORDER})
    return SystemParams(k=k, amp=amp, **couplings)


def _close(a: float, b: float, rtol: float, atol: float) -> bool:
    return abs(a - b) <= atol + rtol * max(abs(a), abs(b))


def _check(name: str, failures: List[str], worst: float = 0.0) -> ValidationCheck:
    detail = "ok" if not failures else "; ".join(failures[:3])
    return ValidationCheck(name=name, passed=not failures, detail=detail, value=worst)


def check_case_consistency(rng: np.random.Generator, draws: int) -> ValidationCheck:
    """Every case closed form equals the general evaluator under its restriction."""
    failures, worst = [], 0.0
    for _ in range(draws):
        z = float(rng.uniform(0.1, 1.0))
        params = random_params(rng, z=z)
        for scenario in CASES:
            restricted = apply_scenario(params, scenario)
            closed = zeno_for_scenario(restricted, z, scenario).Z
            general, _ = general_values(restricted, z)
            scale = 1.0 + max(abs(v) for v in general.values())
            for key in APPLICABLE[scenario]:
                error = abs(closed[key] - general[key])
                worst = max(worst, error / scale)
                if not _close(closed[key], general[key], 1e-10, 1e-12 * scale):
                    failures.append(f"{scenario.value} Z_{key}: {closed[key]:.6g} vs {general[key]:.6g}")
    return _check("case consistency", failures, worst)


def check_conservation(rng: np.random.Generator, draws: int) -> ValidationCheck:
    """Z_V = Z_S - Z_A for pump-probe couplings, from the general evaluator."""
    failures, worst = [], 0.0
    for _ in range(draws):
        z = float(rng.uniform(0.1, 1.0))
        params = apply_scenario(random_params(rng, z=z), ProbeScenario.PUMP_PROBE)
        values, _ = general_values(params, z)
        error = abs(values["V"] - (values["S"] - values["A"]))
        scale = 1.0 + max(abs(v) for v in values.values())
        worst = max(worst, error)
        if error > 1e-12 * scale:
            failures.append(f"residual {error:.3g}")
    return _check("conservation", failures, worst)


def check_spontaneous_nulls(rng: np.random.Generator, draws: int) -> ValidationCheck:
    """Vacuum scattered modes give no Zeno effect; gamma = 0 silences the pump-probe case."""
    failures = []
    for _ in range(draws):
        z = float(rng.uniform(0.1, 1.0))
        params = random_params(rng, z=z)
        vacuum = params.model_copy(update={"amp": params.amp.model_copy(update={
            "S": ModeAmplitude(), "V": ModeAmplitude(), "A": ModeAmplitude()})})
        for scenario in CASES:
            if any(abs(v) > 0.0 for v in zeno_for_scenario(vacuum, z, scenario).Z.values() if v is not None):
                failures.append(f"{scenario.value} nonzero with vacuum S, V, A")

        no_phonon = params.model_copy(update={"amp": params.amp.model_copy(update={"V": ModeAmplitude()})})
        if any(abs(v) > 0.0 for v in zeno_case1(no_phonon, z).Z.values()):
            failures.append("pump-probe nonzero with gamma = 0")

        phonon_only = params.model_copy(update={"amp": params.amp.model_copy(update={
            "S": ModeAmplitude(), "A": ModeAmplitude(), "V": ModeAmplitude(mag=1.0)})})
        for scenario in CASES[1:]:
            value = zeno_for_scenario(phonon_only, z, scenario).Z["V"]
            scenario_params = apply_scenario(phonon_only, scenario)
            if any(getattr(scenario_params, name) for name in PROBE_NAMES) and value == 0.0:
                failures.append(f"{scenario.value} Z_V vanished with gamma != 0")
    return _check("spontaneous nulls", failures)


def check_sign_laws(rng: np.random.Generator, draws: int) -> ValidationCheck:
    """D_S >= 0, D_A = 0 and D_VA <= 0."""
    failures = []
    for _ in range(draws):
        z = float(rng.uniform(0.1, 1.0))
        params = random_params(rng, z=z)
        D_S, _, D_A = d_single(params, z)
        _, _, D_VA = d_pair(params, z)
        if D_S < 0.0:
            failures.append(f"D_S = {D_S:.3g}")
        if D_A != 0.0:
            failures.append(f"D_A = {D_A:.3g}")
        if D_VA > 0.0:
            failures.append(f"D_VA = {D_VA:.3g}")
    return _check("sign laws", failures)


def check_probe_independence(rng: np.random.Generator, draws: int) -> ValidationCheck:
    """Only D_SV responds to the probe couplings."""
    failures, sv_changed = [], False
    for _ in range(draws):
        z = float(rng.uniform(0.1, 1.0))
        params = random_params(rng, z=z)
        other = params.model_copy(update={name: float(rng.uniform(0.0, 0.1 / z)) for name in PROBE_NAMES})
        first = d_single(params, z) + d_pair(params, z)
        second = d_single(other, z) + d_pair(other, z)
        for key, a, b in zip(("D_S", "D_V", "D_A", "D_SV", "D_SA", "D_VA"), first, second):
            if key == "D_SV":
                sv_changed = sv_changed or a != b
            elif a != b:
                failures.append(f"{key} changed with the probe couplings")
    if draws and not sv_changed:
        failures.append("D_SV never responded to the probe couplings")
    return _check("probe independence", failures)


def check_moment_engine(rng: np.random.Generator, draws: int) -> ValidationCheck:
    """Closed forms of D and Z equal the second-order moment engine."""
    failures, worst = [], 0.0
    keys = ("S", "V", "A", "SV", "SA", "VA")
    for _ in range(draws):
        z = float(rng.uniform(0.1, 1.0))
        params = random_params(rng, z=z, max_amplitude=2.0)
        closed = dict(zip(keys, d_single(params, z) + d_pair(params, z)))
        scale = 1.0 + max(abs(v) for v in closed.values())
        for key in keys:
            engine = moment_d(params, z, key)
            worst = max(worst, abs(engine - closed[key]) / scale)
            if not _close(engine, closed[key], 1e-8, 1e-10 * scale):
                failures.append(f"D_{key}: {closed[key]:.6g} vs engine {engine:.6g}")
        for scenario in CASES:
            closed_z = zeno_for_scenario(params, z, scenario).Z
            engine_z = zeno_moments(params, z, scenario).Z
            z_scale = 1.0 + max(abs(v) for v in closed_z.values() if v is not None)
            for key in APPLICABLE[scenario]:
                if not _close(engine_z[key], closed_z[key], 1e-8, 1e-10 * z_scale):
                    failures.append(f"{scenario.value} Z_{key}: {closed_z[key]:.6g} vs engine {engine_z[key]:.6g}")
    return _check("moment engine", failures, worst)


def first_order_drift(params: SystemParams, z: float, nudge: float) -> float:
    """
    Bound on the change of any Z when the mismatches move by nudge.

    Each kernel moves by at most about nudge * z^3, so the bound is that times
    the summed strengths, padded by ten.
    """
    st, pr = case1_strengths(params), probe_strengths(params)
    total = sum(st.C) + sum(st.D) + sum(pr.CS) + sum(pr.DA)
    return 10.0 * abs(nudge) * z ** 3 * total + 1e-15


def check_limit_continuity(rng: np.random.Generator, draws: int) -> ValidationCheck:
    """Closed forms at tiny mismatch approach the phase-matched limits and the special form."""
    failures = []
    for _ in range(draws):
        z = float(rng.uniform(0.1, 1.0))
        params = random_params(rng, z=z, max_k=0.0)
        nudged = params.model_copy(update={"k": params.k.model_copy(update={"S": LIMIT_NUDGE, "A": -LIMIT_NUDGE})})
        for scenario in CASES:
            report = zeno_for_scenario(nudged, z, scenario).Z
            restricted = apply_scenario(params, scenario)
            limit = PHASE_MATCHED[scenario](restricted, z)
            atol = first_order_drift(restricted, z, 2.0 * LIMIT_NUDGE)
            for key, value in limit.items():
                if not _close(report[key], value, 1e-6, atol):
                    failures.append(f"{scenario.value} Z_{key}: {report[key]:.6g} vs limit {value:.6g}")
        special = zeno_case1_special_mismatch(params, z).Z
        matched = zeno_case1(params, z).Z
        for key in ("S", "V", "A"):
            if not _close(special[key], matched[key], 1e-10, 1e-14):
                failures.append(f"special mismatch Z_{key} differs at zero mismatch")
    return _check("limit continuity", failures)


def check_kernel_continuity(rng: np.random.Generator, draws: int) -> ValidationCheck:
    """Kernels agree on both sides of the series threshold."""
    failures = []
    eps = 1e-6
    for _ in range(draws):
        z = float(rng.uniform(0.1, 2.0))
        edge = SERIES_THRESHOLD / z
        other = float(rng.uniform(-5.0, 5.0))
        pairs = [
            (linear_kernel(edge * (1 - eps), z), linear_kernel(edge * (1 + eps), z)),
            (quadratic_kernel(edge * (1 - eps), z), quadratic_kernel(edge * (1 + eps), z)),
            (mixed_kernel(edge * (1 - eps), other, z), mixed_kernel(edge * (1 + eps), other, z)),
            (mixed_kernel(edge * (1 - eps), -edge, z), mixed_kernel(edge * (1 + eps), -edge, z)),
        ]
        for below, above in pairs:
            if abs(below - above) > 1e-8 * max(1.0, abs(below)) * z * z:
                failures.append(f"jump {abs(below - above):.3g} at the series threshold")
    return _check("kernel continuity", failures)


def check_swap_symmetry(rng: np.random.Generator, draws: int) -> ValidationCheck:
    """Exchanging the labels 1 and 2 of the extra modes leaves every Z unchanged."""
    failures, worst = [], 0.0
    for _ in range(draws):
        z = float(rng.uniform(0.1, 1.0))
        params = random_params(rng, z=z)
        swapped = swap_probes(params)
        # the split case pairs probe 1 with Stokes and probe 2 with anti-Stokes
        for scenario in CASES[:3]:
            first = zeno_for_scenario(params, z, scenario).Z
            second = zeno_for_scenario(swapped, z, scenario).Z
            scale = 1.0 + max(abs(first[key]) for key in APPLICABLE[scenario])
            for key in APPLICABLE[scenario]:
                worst = max(worst, abs(first[key] - second[key]) / scale)
                if not _close(first[key], second[key], 1e-10, 1e-14 * scale):
                    failures.append(f"{scenario.value} Z_{key}: {first[key]:.6g} vs swapped {second[key]:.6g}")
    return _check("swap symmetry", failures, worst)


FAST_CHECKS: Dict[str, Callable[[np.random.Generator, int], ValidationCheck]] = {
    "case consistency": check_case_consistency,
    "conservation": check_conservation,
    "spontaneous nulls": check_spontaneous_nulls,
    "sign laws": check_sign_laws,
    "probe independence": check_probe_independence,
    "moment engine": check_moment_engine,
    "limit continuity": check_limit_continuity,
    "kernel continuity": check_kernel_continuity,
    "swap symmetry": check_swap_symmetry,
}

# Draws per check; the moment engine is the expensive one
FAST_DRAWS = {"moment engine": 3}
DEFAULT_DRAWS = 200


# ---------------------------------------------------------------------------
# Oracle checks
# ---------------------------------------------------------------------------

ORACLE_AMPLITUDE = 0.3
ORACLE_KZ = 0.02
ORACLE_DIMS = (5, 5, 5, 5, 5, 5, 5)


def oracle_params(rng: np.random.Generator, scenario: ProbeScenario, z: float = 1.0) -> SystemParams:
    """Small-amplitude, phase-matched configuration for oracle comparisons."""
    amp = ModeAmplitudes(**{
        mode: ModeAmplitude(mag=ORACLE_AMPLITUDE, phase=float(rng.uniform(-0.3, 0.3)))
        for mode in MODE_ORDER
    })
    couplings = {name: ORACLE_KZ / z for name in COUPLINGS}
    # chi = g/2
    couplings["chi"] = 0.5 * couplings["g"]
    return apply_scenario(SystemParams(amp=amp, **couplings), scenario)


def check_oracle_agreement(rng: np.random.Generator, cfg: FockConfig, z: float = 1.0) -> ValidationCheck:
    failures, worst = [], 0.0
    for scenario in CASES:
        params = oracle_params(rng, scenario, z)
        analytic = zeno_for_scenario(params, z, scenario).Z
        exact = oracle.oracle_zeno(params, cfg, z, scenario).Z
        for key in APPLICABLE[scenario]:
            error = abs(analytic[key] - exact[key])
            bound = max(0.05 * abs(analytic[key]), 1e-8)
            worst = max(worst, error / max(abs(analytic[key]), 1e-300))
            if error > bound:
                failures.append(f"{scenario.value} Z_{key}: analytic {analytic[key]:.6g} vs oracle {exact[key]:.6g}")
    return _check("oracle agreement", failures, worst)


def check_oracle_self_consistency(rng: np.random.Generator, cfg: FockConfig, z: float = 1.0) -> ValidationCheck:
    """Norm, <G> and N_S - N_A - N_V are conserved by the pump-probe evolution."""
    failures = []
    params = oracle_params(rng, ProbeScenario.PUMP_PROBE, z)
    G = oracle.build_g(params, cfg)
    start = oracle.coherent_product_state(params, cfg)
    end = oracle.evolve(start, G, z, cfg.z_steps)

    def invariant(state) -> float:
        numbers = oracle.expectation_numbers(state)
        return numbers["S"] - numbers["A"] - numbers["V"]

    drifts = {
        "norm": abs(end.norm - start.norm),
        "<G>": abs(oracle.generator_mean(end, G) - oracle.generator_mean(start, G)),
        "N_S - N_A - N_V": abs(invariant(end) - invariant(start)),
    }
    for name, drift in drifts.items():
        if drift > 1e-8:
            failures.append(f"{name} drift {drift:.3g}")
    return _check("oracle self-consistency", failures, max(drifts.values()))


def check_free_rotation(rng: np.random.Generator, cfg: FockConfig, z: float = 1.0) -> ValidationCheck:
    """With every coupling off, each <a_i> only picks up the phase k_i z."""
    failures, worst = [], 0.0
    amp = ModeAmplitudes(**{
        mode: ModeAmplitude(mag=ORACLE_AMPLITUDE, phase=float(rng.uniform(-np.pi, np.pi)))
        for mode in MODE_ORDER
    })
    k = ModeValues(**{mode: float(rng.uniform(-5.0, 5.0)) for mode in MODE_ORDER})
    params = SystemParams(amp=amp, k=k)
    start = oracle.coherent_product_state(params, cfg)
    end, _ = oracle.evolved_state(params, cfg, z)
    for mode in MODE_ORDER:
        expected = np.exp(1j * params.k.get(mode) * z) * oracle.mean_amplitude(start, mode)
        error = abs(oracle.mean_amplitude(end, mode) - expected)
        worst = max(worst, error)
        if error > 1e-10:
            failures.append(f"<a_{mode}> off by {error:.3g}")
    return _check("free rotation", failures, worst)


def order_scaling_ratios(params: SystemParams, cfg: FockConfig, z: float,
                         scenario: ProbeScenario, key: str) -> List[float]:
    """Discrepancy ratios between analytic and oracle Z along z, z/2, z/4."""
    ladder = [z, z / 2.0, z / 4.0]
    reports = oracle.oracle_scan(params, cfg, ladder, scenario)
    errors = [
        abs(zeno_for_scenario(params, zi, scenario).Z[key] - report.Z[key])
        for zi, report in zip(ladder, reports)
    ]
    return [errors[i] / errors[i + 1] for i in range(len(errors) - 1)]


def check_order_scaling(rng: np.random.Generator, cfg: FockConfig, z: float = 1.0) -> ValidationCheck:
    params = oracle_params(rng, ProbeScenario.PUMP_PROBE, z)
    ratios = order_scaling_ratios(params, cfg, z, ProbeScenario.PUMP_PROBE, "S")
    failures = [f"ratio {r:.3g} outside (5, 20)" for r in ratios if not 5.0 < r < 20.0]
    return _check("order scaling", failures, min(ratios))


def check_truncation(rng: np.random.Generator, cfg: FockConfig, z: float = 1.0) -> ValidationCheck:
    params = oracle_params(rng, ProbeScenario.PUMP_PROBE, z)
    report = oracle.certify_truncation(params, cfg, z)
    failures = [] if report.certified else [report.reason or "not certified"]
    return _check("truncation certification", failures, report.max_change)


FULL_CHECKS = {
    "oracle agreement": check_oracle_agreement,
    "oracle self-consistency": check_oracle_self_consistency,
    "free rotation": check_free_rotation,
    "order scaling": check_order_scaling,
    "truncation certification": check_truncation,
}


def run_fast(seed: int = 0, draws: int = DEFAULT_DRAWS) -> ValidationReport:
    """
    Analytic self-checks over seeded random draws.

    Args:
        seed (int): Random seed
        draws (int): Draws per check (the moment engine uses fewer)

    Returns:
        ValidationReport: One entry per check
    """
    rng = np.random.default_rng(seed)
    checks = []
    for name, check in FAST_CHECKS.items():
        result = check(rng, min(draws, FAST_DRAWS.get(name, draws)))
        logger.info("%s: %s", name, "pass" if result.passed else "FAIL")
        checks.append(result)
    return ValidationReport(level="fast", checks=checks)


def run_full(seed: int = 0, draws: int = DEFAULT_DRAWS, cfg: Optional[FockConfig] = None) -> ValidationReport:
    """Fast checks plus oracle agreement, self-consistency, order scaling and truncation."""
    cfg = cfg or FockConfig(dims=ORACLE_DIMS)
    report = run_fast(seed, draws)
    rng = np.random.default_rng(seed + 1)
    checks = list(report.checks)
    for name, check in FULL_CHECKS.items():
        result = check(rng, cfg)
        logger.info("%s: %s", name, "pass" if result.passed else "FAIL")
        checks.append(result)
    return ValidationReport(level="full", checks=checks)


def format_report(report: ValidationReport) -> str:
    """Pass/fail table."""
    width = max(len(check.name) for check in report.checks)
    lines = [f"{'check'.ljust(width)}  result  detail"]
    for check in report.checks:
        lines.append(f"{check.name.ljust(width)}  {'PASS' if check.passed else 'FAIL':6}  {check.detail}")
    lines.append(f"{report.level}: {'all passed' if report.passed else 'FAILED'}")
    return "\n".join(lines) + "\n"
