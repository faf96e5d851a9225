"""
Fock Oracle Controller Module

This module is the brute-force reference for the analytic engine. It builds
the momentum operator G of the seven interacting modes in a truncated
tensor-product Fock space, prepares the coherent product state, evolves it by
exp(+iGz) and measures mean numbers and four-point correlations on the
evolved state. Observables are taken by reshaping the state vector into a
tensor and lowering along one axis, so no full-space observable matrix is
ever formed.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import logging
from functools import lru_cache, reduce
from typing import Dict, List, Sequence, Tuple

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import expm_multiply

from app.controllers.modelController import apply_scenario, without_probes
from app.controllers.photstatController import classify as classify_stat
from app.controllers.photstatController import g2_normalize
from app.controllers.zenoController import build_report
from app.exceptions import FockException, StatException
from app.models import ProbeScenario
from app.schemas import FockConfig, FockOperator, FockState, StatReport, SystemParams, TruncationReport, ZenoReport
from app.simulation_config import CLASSIFY_TOL, MODE_ORDER

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-8
_SCATTERED = ("S", "V", "A")


def check_budget(cfg: FockConfig) -> int:
    """
    Raises FockException.BudgetExceeded when the basis is larger than allowed.

    Returns:
        int: Basis size
    """
    size = cfg.basis_size
    if size > cfg.max_states:
        raise FockException.BudgetExceeded(
            f"basis size {size} exceeds the budget of {cfg.max_states} states"
        )
    return size


def check_occupancy(params: SystemParams, cfg: FockConfig) -> None:
    """Raises FockException.OccupancyGuard when some |alpha|^2 > dim/4."""
    for mode in MODE_ORDER:
        occupancy = params.magnitude(mode) ** 2
        if occupancy > cfg.dim(mode) / 4.0:
            raise FockException.OccupancyGuard(
                f"|alpha_{mode}|^2 = {occupancy:.4g} exceeds dim/4 = {cfg.dim(mode) / 4.0:.4g}"
            )


@lru_cache(maxsize=64)
def _embedded_lowering(dims: Tuple[int, ...], position: int) -> sparse.csr_matrix:
    dim = dims[position]
    local = sparse.diags(np.sqrt(np.arange(1, dim, dtype=float)), 1, format="csr")
    left = int(np.prod(dims[:position], dtype=np.int64))
    right = int(np.prod(dims[position + 1:], dtype=np.int64))
    return sparse.kron(
        sparse.identity(left, format="csr"),
        sparse.kron(local, sparse.identity(right, format="csr"), format="csr"),
        format="csr",
    )


def _number_diagonal(dims: Tuple[int, ...], weights: Sequence[float]) -> np.ndarray:
    levels = np.zeros(dims)
    for position, weight in enumerate(weights):
        if weight == 0.0:
            continue
        shape = [1] * len(dims)
        shape[position] = dims[position]
        levels = levels + weight * np.arange(dims[position], dtype=float).reshape(shape)
    return levels.ravel()


def build_g(params: SystemParams, cfg: FockConfig) -> FockOperator:
    """
    Momentum operator of the coupled system in the truncated basis.

    Args:
        params (SystemParams): Couplings, wavevectors and amplitudes
        cfg (FockConfig): Truncation settings

    Returns:
        FockOperator: Sparse Hermitian G

    Raises:
        FockException.BudgetExceeded: basis larger than cfg.max_states
        FockException.OccupancyGuard: an amplitude is too large for its dim

    Notes:
        - G = sum_i k_i N_i + T + T^dagger with
          T = g L1 L2 S^+ V^+ + chi L1 L2 V A^+
              + sum_l p_l^+ (Gamma_l L_l + Lambda_l S + Omega_l A)
        - Ladder operators are truncated hard (the top level of a^+ is dropped)
    """
    size = check_budget(cfg)
    check_occupancy(params, cfg)
    dims = tuple(cfg.dims)
    a = {mode: _embedded_lowering(dims, position) for position, mode in enumerate(MODE_ORDER)}
    ad = {mode: op.T.tocsr() for mode, op in a.items()}

    transfer = sparse.csr_matrix((size, size), dtype=complex)
    if params.g:
        transfer = transfer + params.g * (a["L1"] @ a["L2"] @ ad["S"] @ ad["V"])
    if params.chi:
        transfer = transfer + params.chi * (a["L1"] @ a["L2"] @ a["V"] @ ad["A"])
    for j, probe in enumerate(("p1", "p2")):
        pump = ("L1", "L2")[j]
        for strength, target in (
            (params.gamma_probe[j], pump),
            (params.lambda_probe[j], "S"),
            (params.omega_probe[j], "A"),
        ):
            if strength:
                transfer = transfer + strength * (ad[probe] @ a[target])

    diagonal = _number_diagonal(dims, [params.k.get(mode) for mode in MODE_ORDER])
    matrix = sparse.diags(diagonal, 0, format="csr", dtype=complex) + transfer + transfer.conj().T
    logger.info("built G on %d basis states with %d nonzeros", size, matrix.nnz)
    return FockOperator(matrix=matrix.tocsr(), dims=dims, hermitian=True)


def coherent_vector(alpha: complex, dim: int) -> np.ndarray:
    """Truncated coherent state e^{-|a|^2/2} a^n / sqrt(n!), renormalized."""
    vector = np.zeros(dim, dtype=complex)
    vector[0] = 1.0
    for n in range(1, dim):
        vector[n] = vector[n - 1] * alpha / np.sqrt(n)
    return vector / np.linalg.norm(vector)


def coherent_product_state(params: SystemParams, cfg: FockConfig) -> FockState:
    """
    Tensor product of per-mode coherent states in basis order.

    Raises:
        FockException.BudgetExceeded: basis larger than cfg.max_states
        FockException.OccupancyGuard: an amplitude is too large for its dim
    """
    check_budget(cfg)
    check_occupancy(params, cfg)
    factors = [coherent_vector(params.amplitude(mode), cfg.dim(mode)) for mode in MODE_ORDER]
    return FockState(vector=reduce(np.kron, factors), dims=tuple(cfg.dims))


def evolve(state: FockState, G: FockOperator, z: float, z_steps: int = 1) -> FockState:
    """
    Applies exp(+iGz) to a state.

    Args:
        state (FockState): Initial state
        G (FockOperator): Hermitian generator in the same basis
        z (float): Propagation length
        z_steps (int): Number of equal substeps

    Returns:
        FockState: Evolved state

    Raises:
        FockException.NonConvergence: the action did not produce a finite,
        norm-preserving vector
    """
    if tuple(state.dims) != tuple(G.dims):
        raise ValueError("state and operator live in different bases")
    if z == 0.0:
        return state
    step = 1j * (z / z_steps) * G.matrix
    vector = state.vector
    try:
        for _ in range(z_steps):
            vector = expm_multiply(step, vector)
    except (ArithmeticError, ValueError, RuntimeError) as exc:
        raise FockException.NonConvergence(f"expm_multiply failed: {exc}")

    if not np.all(np.isfinite(vector)):
        raise FockException.NonConvergence("evolved state is not finite")
    drift = abs(np.linalg.norm(vector) - state.norm)
    if drift > NORM_TOLERANCE:
        raise FockException.NonConvergence(
            f"norm drift {drift:.3g} after evolution exceeds {NORM_TOLERANCE:.1g}"
        )
    logger.debug("evolved over z=%.6g in %d steps, norm drift %.3g", z, z_steps, drift)
    return FockState(vector=vector, dims=state.dims)


def step_doubling_error(state: FockState, G: FockOperator, z: float, z_steps: int = 1) -> float:
    """Distance between evolutions with z_steps and 2*z_steps substeps."""
    coarse = evolve(state, G, z, z_steps)
    fine = evolve(state, G, z, 2 * z_steps)
    return float(np.linalg.norm(coarse.vector - fine.vector))


def lower(tensor: np.ndarray, axis: int) -> np.ndarray:
    """Applies the lowering operator of one mode to a state tensor."""
    dim = tensor.shape[axis]
    shape = [1] * tensor.ndim
    shape[axis] = dim - 1
    source = [slice(None)] * tensor.ndim
    target = [slice(None)] * tensor.ndim
    source[axis] = slice(1, None)
    target[axis] = slice(0, dim - 1)
    result = np.zeros_like(tensor)
    result[tuple(target)] = tensor[tuple(source)] * np.sqrt(np.arange(1, dim, dtype=float)).reshape(shape)
    return result


def _axis(mode: str) -> int:
    return MODE_ORDER.index(mode)


def _weight(tensor: np.ndarray) -> float:
    return float(np.vdot(tensor, tensor).real)


def expectation_numbers(state: FockState) -> Dict[str, float]:
    """<N_i> for every mode."""
    tensor = state.tensor()
    return {mode: _weight(lower(tensor, _axis(mode))) for mode in MODE_ORDER}


def mean_amplitude(state: FockState, mode: str) -> complex:
    """<a_mode>."""
    tensor = state.tensor()
    return complex(np.vdot(tensor, lower(tensor, _axis(mode))))


def four_point(state: FockState, mode: str) -> float:
    """<a^+ a^+ a a> of one mode."""
    axis = _axis(mode)
    return _weight(lower(lower(state.tensor(), axis), axis))


def pair_point(state: FockState, first: str, second: str) -> float:
    """<a_i^+ a_j^+ a_j a_i> of two distinct modes."""
    return _weight(lower(lower(state.tensor(), _axis(first)), _axis(second)))


def generator_mean(state: FockState, G: FockOperator) -> float:
    """<G> on a state."""
    return float(np.vdot(state.vector, G.matrix @ state.vector).real)


def top_level_weights(state: FockState) -> Dict[str, float]:
    """Marginal probability of the highest retained level of every mode."""
    probabilities = np.abs(state.tensor()) ** 2
    weights = {}
    for axis, mode in enumerate(MODE_ORDER):
        weights[mode] = float(np.take(probabilities, -1, axis=axis).sum())
    return weights


def evolved_state(params: SystemParams, cfg: FockConfig, z: float) -> Tuple[FockState, FockOperator]:
    G = build_g(params, cfg)
    return evolve(coherent_product_state(params, cfg), G, z, cfg.z_steps), G


def oracle_zeno(params: SystemParams, cfg: FockConfig, z: float,
                scenario: ProbeScenario = ProbeScenario.PUMP_PROBE,
                tol: float = CLASSIFY_TOL) -> ZenoReport:
    """
    Zeno parameters from two exact evolutions.

    Args:
        params (SystemParams): Configuration
        cfg (FockConfig): Truncation settings
        z (float): Propagation length
        scenario (ProbeScenario): Couplings kept for the probed run
        tol (float): Classification tolerance

    Returns:
        ZenoReport: <N> with probes minus <N> without, per scattered mode
    """
    probed = apply_scenario(params, scenario)
    with_probes, _ = evolved_state(probed, cfg, z)
    free, _ = evolved_state(without_probes(probed), cfg, z)
    n_probed = expectation_numbers(with_probes)
    n_free = expectation_numbers(free)
    values = {mode: n_probed[mode] - n_free[mode] for mode in _SCATTERED}
    return build_report(scenario, z, values, tol, source="oracle")


def oracle_scan(params: SystemParams, cfg: FockConfig, z_values: Sequence[float],
                scenario: ProbeScenario = ProbeScenario.PUMP_PROBE) -> List[ZenoReport]:
    """Oracle Zeno reports over several propagation lengths."""
    return [oracle_zeno(params, cfg, float(z), scenario) for z in z_values]


def state_statistics(state: FockState, tol: float = CLASSIFY_TOL) -> StatReport:
    """Discriminants and g2 measured on a state."""
    numbers = expectation_numbers(state)
    D = {mode: four_point(state, mode) - numbers[mode] ** 2 for mode in _SCATTERED}
    for first, second in (("S", "V"), ("S", "A"), ("V", "A")):
        D[first + second] = pair_point(state, first, second) - numbers[first] * numbers[second]

    g2 = {}
    for key, value in D.items():
        try:
            g2[key] = g2_normalize(value, numbers[key[0]], numbers[key[-1]], tol)
        except StatException.DegenerateMean:
            continue
    return StatReport(
        z=0.0,
        D=D,
        g2=g2,
        classification={key: classify_stat(value, tol) for key, value in D.items()},
        tol=tol,
        source="oracle",
    )


def oracle_stats(params: SystemParams, cfg: FockConfig, z: float, tol: float = CLASSIFY_TOL) -> StatReport:
    """Exact discriminants after one evolution."""
    state, _ = evolved_state(params, cfg, z)
    return state_statistics(state, tol).model_copy(update={"z": z})


def _observables(params: SystemParams, cfg: FockConfig, z: float) -> Tuple[Dict[str, float], Dict[str, float]]:
    state, _ = evolved_state(params, cfg, z)
    numbers = expectation_numbers(state)
    return {f"N_{mode}": numbers[mode] for mode in _SCATTERED}, top_level_weights(state)


def certify_truncation(params: SystemParams, cfg: FockConfig, z: float) -> TruncationReport:
    """
    Checks that the scattered mean numbers have converged in the truncation.

    Args:
        params (SystemParams): Configuration
        cfg (FockConfig): Truncation to certify
        z (float): Propagation length

    Returns:
        TruncationReport: certified when every <N_S>, <N_V>, <N_A> changes
        by less than cfg.tol_truncation once every dim grows by 2; growth
        lists the modes whose top level carries more than that weight
    """
    try:
        base, weights = _observables(params, cfg, z)
        grown, _ = _observables(params, cfg.grown(2), z)
    except (FockException.OccupancyGuard, FockException.BudgetExceeded) as exc:
        logger.info("truncation not certified: %s", exc.detail)
        return TruncationReport(certified=False, max_change=float("inf"), dims=tuple(cfg.dims), reason=exc.detail)

    changes = {key: abs(grown[key] - base[key]) for key in base}
    max_change = max(changes.values())
    growth = [mode for mode, weight in weights.items() if weight > cfg.tol_truncation]
    certified = max_change < cfg.tol_truncation
    logger.info("truncation %s at dims %s (max change %.3g)",
                "certified" if certified else "not certified", cfg.dims, max_change)
    return TruncationReport(
        certified=certified,
        max_change=max_change,
        dims=tuple(cfg.dims),
        changes=changes,
        growth=growth,
        reason=None if certified else f"max change {max_change:.3g} >= {cfg.tol_truncation:.3g}",
    )
