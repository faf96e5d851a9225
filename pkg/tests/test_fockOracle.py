"""
Tests for the truncated Fock-space oracle.

Every test builds at least one operator on the seven-mode basis, so the
whole module is marked slow.
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from app.controllers import fockOracleController as oracle
from app.controllers.validationController import (
    ORACLE_DIMS, check_free_rotation, check_oracle_agreement, check_oracle_self_consistency,
    check_order_scaling, check_truncation, oracle_params
)
from app.exceptions import FockException
from app.models import ProbeScenario
from app.schemas import FockConfig, FockState, ModeAmplitude, ModeAmplitudes, ModeValues, SystemParams
from app.simulation_config import MODE_ORDER

pytestmark = pytest.mark.slow

SMALL = FockConfig(dims=(3, 3, 3, 3, 3, 3, 3))


def _uniform_amplitudes(mag: float) -> ModeAmplitudes:
    return ModeAmplitudes(**{mode: ModeAmplitude(mag=mag) for mode in MODE_ORDER})


class TestStates:
    def test_vacuum(self):
        state = oracle.coherent_product_state(SystemParams(), SMALL)
        assert_allclose(state.norm, 1.0)
        assert state.vector[0] == 1.0
        assert_allclose(oracle.expectation_numbers(state)["S"], 0.0)

    def test_coherent_amplitude(self):
        cfg = FockConfig(dims=(7, 3, 3, 3, 3, 3, 3))
        params = SystemParams(amp=ModeAmplitudes(p1=ModeAmplitude(mag=0.2, phase=0.5)))
        state = oracle.coherent_product_state(params, cfg)
        assert_allclose(oracle.mean_amplitude(state, "p1"), 0.2 * np.exp(0.5j), rtol=1e-5)

    def test_single_photon_statistics(self):
        dims = (2,) * 7
        tensor = np.zeros(dims, dtype=complex)
        index = [0] * 7
        index[MODE_ORDER.index("S")] = 1
        tensor[tuple(index)] = 1.0
        report = oracle.state_statistics(FockState(vector=tensor.ravel(), dims=dims))
        assert_allclose(report.D["S"], -1.0)
        assert_allclose(report.g2["S"], 0.0)
        assert report.source == "oracle"

    def test_top_level_weights(self):
        state = oracle.coherent_product_state(SystemParams(amp=_uniform_amplitudes(0.3)), SMALL)
        weights = oracle.top_level_weights(state)
        expected = (0.09 ** 2 / 2.0) / (1.0 + 0.09 + 0.09 ** 2 / 2.0)
        assert_allclose(weights["A"], expected, rtol=1e-10)


class TestOperator:
    def test_uncoupled_operator_is_diagonal(self):
        params = SystemParams(k=ModeValues(p1=0.5, S=1.5, A=-2.0))
        G = oracle.build_g(params, FockConfig(dims=(2,) * 7))
        dense = G.matrix.toarray()
        assert np.count_nonzero(dense - np.diag(np.diag(dense))) == 0
        assert_allclose(dense[-1, -1], 0.5 + 1.5 - 2.0)

    def test_operator_is_hermitian(self):
        params = oracle_params(np.random.default_rng(3), ProbeScenario.PUMP_PROBE)
        G = oracle.build_g(params.model_copy(update={"Lambda1": 0.01, "Omega2": 0.02}), SMALL)
        assert abs(G.matrix - G.matrix.conj().T).max() <= 1e-15

    def test_budget(self):
        with pytest.raises(FockException.BudgetExceeded):
            oracle.build_g(SystemParams(), SMALL.model_copy(update={"max_states": 100}))

    def test_occupancy_guard(self):
        with pytest.raises(FockException.OccupancyGuard):
            oracle.coherent_product_state(SystemParams(amp=_uniform_amplitudes(2.0)), FockConfig(dims=(4,) * 7))


class TestEvolution:
    def test_zero_length(self):
        params = oracle_params(np.random.default_rng(1), ProbeScenario.PUMP_PROBE)
        report = oracle.oracle_zeno(params, SMALL, 0.0)
        assert report.Z == {"S": 0.0, "V": 0.0, "A": 0.0}
        assert report.source == "oracle"

    def test_free_phase_rotation(self):
        params = SystemParams(k=ModeValues(S=1.7), amp=ModeAmplitudes(S=ModeAmplitude(mag=0.3)))
        state, _ = oracle.evolved_state(params, SMALL, 0.8)
        start = oracle.coherent_product_state(params, SMALL)
        assert_allclose(oracle.mean_amplitude(state, "S"),
                        np.exp(1.7j * 0.8) * oracle.mean_amplitude(start, "S"), rtol=1e-10)

    def test_free_rotation_check(self):
        check = check_free_rotation(np.random.default_rng(8), SMALL, 0.7)
        assert check.passed, check.detail

    def test_small_norm_drift_is_rejected(self, monkeypatch):
        params = oracle_params(np.random.default_rng(2), ProbeScenario.PUMP_PROBE)
        G = oracle.build_g(params, SMALL)
        start = oracle.coherent_product_state(params, SMALL)
        monkeypatch.setattr(oracle, "expm_multiply", lambda A, v: (1.0 + 5 * oracle.NORM_TOLERANCE) * v)
        with pytest.raises(FockException.NonConvergence, match="norm drift"):
            oracle.evolve(start, G, 1.0)

    def test_step_doubling(self):
        params = oracle_params(np.random.default_rng(2), ProbeScenario.PUMP_PROBE)
        G = oracle.build_g(params, SMALL)
        start = oracle.coherent_product_state(params, SMALL)
        assert oracle.step_doubling_error(start, G, 1.0, 2) < 1e-10

    def test_self_consistency(self):
        check = check_oracle_self_consistency(np.random.default_rng(4), FockConfig(dims=(4,) * 7))
        assert check.passed, check.detail


class TestAgreement:
    def test_all_scenarios(self):
        check = check_oracle_agreement(np.random.default_rng(5), FockConfig(dims=ORACLE_DIMS))
        assert check.passed, check.detail

    def test_order_scaling(self):
        check = check_order_scaling(np.random.default_rng(6), FockConfig(dims=ORACLE_DIMS))
        assert check.passed, check.detail

    def test_truncation_certified(self):
        check = check_truncation(np.random.default_rng(7), FockConfig(dims=ORACLE_DIMS))
        assert check.passed, check.detail

    def test_large_amplitudes_not_certified(self):
        params = SystemParams(g=0.01, amp=_uniform_amplitudes(2.0))
        report = oracle.certify_truncation(params, FockConfig(dims=(4,) * 7), 1.0)
        assert not report.certified
        assert report.reason
