"""
Tests for parameter schemas and the model controller.
"""

import logging

import numpy as np
import pytest
from numpy.testing import assert_allclose
from pydantic import ValidationError

from app.controllers.modelController import (
    apply_axis, apply_scenario, check_validity, derive_phases,
    impose_special_mismatch, swap_probes, without_probes
)
from app.exceptions import SweepException, ValidityException
from app.models import ProbeScenario, SweepAxisName
from app.schemas import ModeAmplitude, ModeValues, SystemParams, canonical_phase


@pytest.mark.unit
class TestSchemas:
    def test_phase_is_canonicalized(self):
        assert_allclose(ModeAmplitude(mag=1.0, phase=3 * np.pi / 2).phase, -np.pi / 2)
        assert ModeAmplitude(mag=1.0, phase=-np.pi).phase == np.pi
        assert canonical_phase(0.25) == 0.25

    def test_negative_magnitude_rejected(self):
        with pytest.raises(ValidationError):
            ModeAmplitude(mag=-1.0)

    def test_negative_g_rejected(self):
        with pytest.raises(ValidationError):
            SystemParams(g=-0.1)

    def test_json_round_trip(self, reference_params):
        restored = SystemParams.model_validate_json(reference_params.model_dump_json())
        assert restored == reference_params

    def test_amplitude_is_complex(self):
        params = SystemParams(amp={"S": {"mag": 2.0, "phase": np.pi / 2}})
        assert_allclose(params.amplitude("S"), 2j, atol=1e-15)
        assert params.magnitude("S") == 2.0


@pytest.mark.unit
class TestDerivedPhases:
    def test_mismatch_definitions(self):
        params = SystemParams(k=ModeValues(p1=1.0, p2=2.0, L1=3.0, L2=5.0, S=7.0, V=11.0, A=13.0))
        ph = derive_phases(params)
        assert ph.dk_S == 7.0 + 11.0 - 3.0 - 5.0
        assert ph.dk_A == 3.0 + 5.0 + 11.0 - 13.0
        assert ph.dk_L == (2.0, 3.0)
        assert ph.dk_Sj == (6.0, 5.0)
        assert ph.dk_Aj == (12.0, 11.0)

    def test_phase_differences(self):
        amp = {m: {"mag": 1.0, "phase": p} for m, p in
               zip(("p1", "p2", "L1", "L2", "S", "V", "A"), (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7))}
        ph = derive_phases(SystemParams(amp=amp))
        assert_allclose(ph.dtheta_S, 0.5 + 0.6 - 0.3 - 0.4)
        assert_allclose(ph.dtheta_A, 0.3 + 0.4 + 0.6 - 0.7)
        assert_allclose(ph.dphi_L, (0.2, 0.2))
        assert_allclose(ph.dphi_S, (0.4, 0.3))
        assert_allclose(ph.dphi_A, (0.6, 0.5))


@pytest.mark.unit
class TestScenarios:
    def test_pump_probe_keeps_gamma_only(self):
        params = SystemParams(Gamma1=1, Gamma2=2, Lambda1=3, Lambda2=4, Omega1=5, Omega2=6)
        restricted = apply_scenario(params, ProbeScenario.PUMP_PROBE)
        assert restricted.gamma_probe == (1, 2)
        assert restricted.lambda_probe == (0.0, 0.0)
        assert restricted.omega_probe == (0.0, 0.0)

    def test_split_probe_keeps_lambda1_and_omega2(self):
        params = SystemParams(Gamma1=1, Gamma2=2, Lambda1=3, Lambda2=4, Omega1=5, Omega2=6)
        restricted = apply_scenario(params, ProbeScenario.SPLIT_PROBE)
        assert restricted.couplings() == {
            "g": 0.0, "chi": 0.0, "Gamma1": 0.0, "Gamma2": 0.0,
            "Lambda1": 3, "Lambda2": 0.0, "Omega1": 0.0, "Omega2": 6,
        }

    def test_general_is_identity(self, reference_params):
        assert apply_scenario(reference_params, ProbeScenario.GENERAL) is reference_params

    def test_without_probes(self, reference_params):
        assert without_probes(reference_params).gamma_probe == (0.0, 0.0)
        assert without_probes(reference_params).g == reference_params.g

    def test_swap_probes_twice_is_identity(self, reference_params):
        assert swap_probes(swap_probes(reference_params)) == reference_params


@pytest.mark.unit
class TestValidity:
    def test_returns_worst_product(self, reference_params):
        assert_allclose(check_validity(reference_params, 0.1), 0.115)

    def test_warning_above_threshold(self, reference_params, caplog):
        with caplog.at_level(logging.WARNING):
            check_validity(reference_params, 0.5)
        assert "unreliable" in caplog.text

    def test_hard_violation_only_when_strict(self, reference_params):
        check_validity(reference_params, 2.0)
        with pytest.raises(ValidityException.HardViolation) as info:
            check_validity(reference_params, 2.0, strict=True)
        assert info.value.exit_code == 3


@pytest.mark.unit
class TestAxes:
    @pytest.mark.parametrize("axis, attribute", [
        (SweepAxisName.DTHETA_S, "dtheta_S"),
        (SweepAxisName.DTHETA_A, "dtheta_A"),
    ])
    def test_phase_axes(self, reference_params, axis, attribute):
        shifted = apply_axis(reference_params, axis, 1.25, 0.1)
        assert_allclose(getattr(derive_phases(shifted), attribute), 1.25)

    def test_common_phase_axis_sets_both(self, reference_params):
        ph = derive_phases(apply_axis(reference_params, SweepAxisName.DTHETA, -2.0, 0.1))
        assert_allclose((ph.dtheta_S, ph.dtheta_A), (-2.0, -2.0))

    def test_probe_phase_axes(self, reference_params):
        ph = derive_phases(apply_axis(reference_params, SweepAxisName.DPHI_L2, 0.7, 0.1))
        assert_allclose(ph.dphi_L, (0.0, 0.7), atol=1e-15)
        ph = derive_phases(apply_axis(reference_params, SweepAxisName.DPHI_L, 0.3, 0.1))
        assert_allclose(ph.dphi_L, (0.3, 0.3))

    def test_mismatch_axes(self, reference_params):
        z = 0.1
        ph = derive_phases(apply_axis(reference_params, SweepAxisName.DK_S_Z, 2.0, z))
        assert_allclose(ph.dk_S * z, 2.0)
        ph = derive_phases(apply_axis(reference_params, SweepAxisName.DK_A_G, 3.0, z))
        assert_allclose(ph.dk_A / reference_params.g, 3.0)
        ph = derive_phases(apply_axis(reference_params, SweepAxisName.DK_L_Z, 0.5, z))
        assert_allclose(np.array(ph.dk_L) * z, (0.5, 0.5))

    def test_z_axis_needs_positive_length(self, reference_params):
        with pytest.raises(SweepException.InvalidAxis):
            apply_axis(reference_params, SweepAxisName.DK_S_Z, 1.0, 0.0)

    def test_special_mismatch_constraint(self, reference_params):
        params = apply_axis(reference_params, SweepAxisName.DK_S_G, 4.0, 0.1)
        ph = derive_phases(impose_special_mismatch(params))
        assert_allclose(ph.dk_S, 4.0)
        assert_allclose(ph.dk_A, -4.0)
        assert_allclose(ph.dk_L, (4.0, 4.0))
