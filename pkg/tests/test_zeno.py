"""
Tests for the Zeno parameter evaluators.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from numpy.testing import assert_allclose

from app.controllers.modelController import apply_axis, apply_scenario, impose_special_mismatch, swap_probes
from app.controllers.zenoController import (
    APPLICABLE, PHASE_MATCHED, case1_strengths, classify, find_transition, general_values,
    probe_strengths, zeno_case1, zeno_case1_special_mismatch, zeno_case2, zeno_case3, zeno_case4,
    zeno_for_scenario, zeno_general
)
from app.models import ProbeScenario, SweepAxisName, ZenoClass
from app.schemas import ModeAmplitude, ModeValues
from tests.conftest import lengths, system_params

GZ = 0.1
CASES = (ProbeScenario.PUMP_PROBE, ProbeScenario.STOKES_PROBE,
         ProbeScenario.ANTI_STOKES_PROBE, ProbeScenario.SPLIT_PROBE)


def _with_amp(params, **amplitudes):
    return params.model_copy(update={"amp": params.amp.model_copy(update={
        mode: ModeAmplitude(mag=mag) for mode, mag in amplitudes.items()})})


@pytest.mark.unit
class TestPhaseMatchedValue:
    def test_reference_strengths(self, reference_params):
        st = case1_strengths(reference_params)
        assert_allclose(st.C, (13.685, 10.304), rtol=1e-12)
        assert_allclose(st.D, (2.1505, 1.6192), rtol=1e-12)

    def test_stokes_value(self, reference_params):
        report = zeno_case1(reference_params, GZ)
        expected = -0.25 * (13.685 + 10.304) * GZ ** 2
        assert_allclose(report.Z["S"], expected, rtol=1e-10)
        assert_allclose(report.Z["S"], -0.0599725, rtol=1e-10)
        assert report.classification["S"] == ZenoClass.QZE

    def test_anti_stokes_value(self, reference_params):
        report = zeno_case1(reference_params, GZ)
        assert_allclose(report.Z["A"], -0.25 * (2.1505 + 1.6192) * GZ ** 2, rtol=1e-10)

    def test_general_evaluator_near_phase_matching(self, reference_params):
        nudged = reference_params.model_copy(update={"k": ModeValues(S=1e-8)})
        general = zeno_general(nudged, GZ)
        assert general.source == "general"
        assert_allclose(general.Z["S"], -0.0599725, rtol=1e-6)

    def test_probe_phase_pi_gives_anti_zeno(self, reference_params):
        params = apply_axis(reference_params, SweepAxisName.DPHI_L, np.pi, GZ)
        report = zeno_case1(params, GZ)
        assert_allclose(report.Z["S"], 0.0599725, rtol=1e-10)
        assert report.classification["S"] == ZenoClass.QAZE


@pytest.mark.unit
class TestIdentities:
    @given(params=system_params(), z=lengths)
    @settings(max_examples=1000, deadline=None)
    def test_conservation(self, params, z):
        report = zeno_case1(params, z)
        assert abs(report.Z["V"] - (report.Z["S"] - report.Z["A"])) <= 1e-12

    @given(params=system_params(), z=lengths)
    @settings(max_examples=500, deadline=None)
    def test_case_consistency(self, params, z):
        for scenario in CASES:
            restricted = apply_scenario(params, scenario)
            closed = zeno_for_scenario(restricted, z, scenario).Z
            general, residue = general_values(restricted, z)
            scale = 1.0 + max(abs(v) for v in general.values())
            for key in APPLICABLE[scenario]:
                assert abs(closed[key] - general[key]) <= 1e-10 * scale
            assert residue <= 1e-10 * scale

    @given(params=system_params(), z=lengths)
    @settings(max_examples=200, deadline=None)
    def test_probe_symmetry(self, params, z):
        for scenario in (ProbeScenario.PUMP_PROBE, ProbeScenario.STOKES_PROBE, ProbeScenario.ANTI_STOKES_PROBE):
            first = zeno_for_scenario(params, z, scenario).Z
            second = zeno_for_scenario(swap_probes(params), z, scenario).Z
            for key in APPLICABLE[scenario]:
                assert_allclose(first[key], second[key], rtol=1e-10, atol=1e-14)

    def test_zero_length(self, reference_params):
        values, _ = general_values(reference_params, 0.0)
        assert values == {"S": 0.0, "V": 0.0, "A": 0.0}


@pytest.mark.unit
class TestNulls:
    def test_spontaneous_case(self, reference_params):
        vacuum = _with_amp(reference_params, S=0.0, V=0.0, A=0.0).model_copy(update={
            "Lambda1": 0.3, "Lambda2": 0.2, "Omega1": 0.4, "Omega2": 0.1})
        for scenario in CASES:
            report = zeno_for_scenario(vacuum, GZ, scenario)
            assert all(v == 0.0 for v in report.Z.values() if v is not None)

    def test_no_phonon_silences_pump_probe(self, reference_params):
        report = zeno_case1(_with_amp(reference_params, V=0.0), GZ)
        assert report.Z == {"S": 0.0, "V": 0.0, "A": 0.0}
        assert report.classification["S"] == ZenoClass.NEUTRAL

    def test_partial_stimulation_cases(self, reference_params):
        params = _with_amp(reference_params, S=0.0, A=0.0, V=1.0).model_copy(update={
            "Lambda1": 0.3, "Lambda2": 0.2, "Omega1": 0.4, "Omega2": 0.1})
        assert zeno_case2(params, GZ).Z["V"] != 0.0
        assert zeno_case3(params, GZ).Z["V"] != 0.0
        assert zeno_case4(params, GZ).Z["V"] != 0.0

    def test_probed_modes_not_applicable(self, reference_params):
        params = reference_params.model_copy(update={"Lambda1": 0.3, "Omega2": 0.2})
        case2 = zeno_case2(params, GZ)
        assert case2.Z["S"] is None and case2.Z["A"] == 0.0
        assert case2.classification["S"] == ZenoClass.NOT_APPLICABLE
        case3 = zeno_case3(params, GZ)
        assert case3.Z["A"] is None and case3.Z["S"] == 0.0
        case4 = zeno_case4(params, GZ)
        assert case4.Z["S"] is None and case4.Z["A"] is None

    def test_anti_stokes_probe_without_omega(self, reference_params):
        params = reference_params.model_copy(update={"Lambda1": 0.3})
        assert zeno_case3(params, GZ).Z["V"] == 0.0


@pytest.mark.unit
class TestPhaseMatchedLimits:
    def test_limits_near_zero_mismatch(self, reference_params):
        params = reference_params.model_copy(update={
            "Lambda1": 0.3, "Lambda2": 0.2, "Omega1": 0.4, "Omega2": 0.1,
            "amp": reference_params.amp.model_copy(update={
                "S": ModeAmplitude(mag=7.0, phase=0.4), "A": ModeAmplitude(mag=1.0, phase=-0.2)}),
        })
        nudged = params.model_copy(update={"k": ModeValues(S=1e-8, A=-1e-8)})
        for scenario in CASES:
            closed = zeno_for_scenario(nudged, GZ, scenario).Z
            limit = PHASE_MATCHED[scenario](apply_scenario(params, scenario), GZ)
            for key, value in limit.items():
                assert_allclose(closed[key], value, rtol=1e-6, atol=1e-15)

    def test_split_probe_limit(self, reference_params):
        params = reference_params.model_copy(update={"Lambda1": 0.3, "Omega2": 0.2})
        st = probe_strengths(params)
        limit = PHASE_MATCHED[ProbeScenario.SPLIT_PROBE](params, GZ)
        assert_allclose(limit["V"], 0.25 * GZ ** 2 * (st.CS[0] - st.DA[1]))

    def test_anti_stokes_probe_is_zeno_when_matched(self, reference_params):
        params = reference_params.model_copy(update={"Omega1": 0.4, "Omega2": 0.1})
        assert zeno_case3(params, GZ).classification["V"] == ZenoClass.QZE


@pytest.mark.unit
class TestSpecialMismatch:
    def test_reduces_to_case1_at_zero_mismatch(self, reference_params):
        special = zeno_case1_special_mismatch(reference_params, GZ)
        matched = zeno_case1(reference_params, GZ)
        for key in ("S", "V", "A"):
            assert_allclose(special.Z[key], matched.Z[key], rtol=1e-10)

    def test_matches_case1_under_constraint(self, reference_params):
        for x in (0.3, 1.7, 4.0):
            params = impose_special_mismatch(apply_axis(reference_params, SweepAxisName.DK_S_Z, x, GZ))
            special = zeno_case1_special_mismatch(params, GZ).Z
            closed = zeno_case1(params, GZ).Z
            for key in ("S", "A"):
                assert_allclose(special[key], closed[key], rtol=1e-10, atol=1e-16)

    def test_vanishes_at_full_period(self, reference_params):
        params = apply_axis(reference_params, SweepAxisName.DK_S_Z, 2.0 * np.pi, GZ)
        assert abs(zeno_case1_special_mismatch(params, GZ).Z["S"]) < 1e-15


@pytest.mark.unit
class TestTransitions:
    def test_first_stokes_transition(self, reference_params):
        roots = find_transition(reference_params, GZ, SweepAxisName.DK_S_Z, (1e-3, 2.0 * np.pi))
        assert roots
        assert abs(roots[0] - 0.742 * np.pi) <= 0.01 * np.pi

    def test_phase_transitions(self, reference_params):
        roots = find_transition(reference_params, GZ, SweepAxisName.DTHETA_S, (-np.pi, np.pi))
        assert_allclose(roots, (-np.pi / 2, np.pi / 2), atol=1e-5)

    def test_special_mismatch_roots(self, reference_params):
        window = (1e-3, 2.25 * np.pi)
        roots = find_transition(reference_params, GZ, SweepAxisName.DK_S_Z, window, special_mismatch=True)
        assert_allclose(roots, (np.pi / 2, 3 * np.pi / 2), atol=1e-5)
        touching = find_transition(reference_params, GZ, SweepAxisName.DK_S_Z, window,
                                   special_mismatch=True, touching=True)
        assert_allclose(touching, (np.pi / 2, 3 * np.pi / 2, 2 * np.pi), atol=1e-5)

    def test_constant_sign_gives_no_roots(self, reference_params):
        assert find_transition(reference_params, GZ, SweepAxisName.DTHETA_S, (-1.0, 1.0)) == []

    def test_classify(self):
        assert classify(None) == ZenoClass.NOT_APPLICABLE
        assert classify(-1.0) == ZenoClass.QZE
        assert classify(1.0) == ZenoClass.QAZE
        assert classify(1e-14) == ZenoClass.NEUTRAL
