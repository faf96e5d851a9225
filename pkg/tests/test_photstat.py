"""
Tests for the antibunching discriminants, g2 and the moment engine.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from app.controllers.modelController import apply_axis
from app.controllers.photstatController import (
    STAT_KEYS, classify, d_pair, d_single, g2_normalize, mean_number, moment_d, stat_report, zeno_moments
)
from app.controllers.sweepController import FIG8_CURVES, fig8_params
from app.controllers.zenoController import APPLICABLE, zeno_for_scenario
from app.exceptions import ParameterException, StatException
from app.models import ProbeScenario, StatClass, SweepAxisName
from app.schemas import ModeAmplitude, ModeAmplitudes, ModeValues, SystemParams
from tests.conftest import COUPLING_NAMES, lengths, system_params

PROBES = ("Gamma1", "Gamma2", "Lambda1", "Lambda2", "Omega1", "Omega2")


@pytest.fixture
def mixed_params() -> SystemParams:
    """Every coupling on, generic phases and wavevectors, moderate amplitudes."""
    couplings = dict(zip(COUPLING_NAMES, (0.09, 0.06, 0.05, 0.07, 0.04, 0.08, 0.03, 0.06)))
    amp = ModeAmplitudes(
        p1=ModeAmplitude(mag=1.2, phase=0.3), p2=ModeAmplitude(mag=0.8, phase=-1.1),
        L1=ModeAmplitude(mag=1.5, phase=0.7), L2=ModeAmplitude(mag=1.1, phase=2.0),
        S=ModeAmplitude(mag=0.9, phase=-0.4), V=ModeAmplitude(mag=1.3, phase=1.2),
        A=ModeAmplitude(mag=0.6, phase=-2.5),
    )
    k = ModeValues(p1=0.4, p2=-0.9, L1=1.3, L2=-0.2, S=2.1, V=0.5, A=-1.7)
    return SystemParams(k=k, amp=amp, **couplings)


@pytest.mark.unit
class TestSingleMode:
    def test_zero_length(self, reference_params):
        assert d_single(reference_params, 0.0) == (0.0, 0.0, 0.0)

    def test_phase_matched_stokes_limit(self, reference_params):
        z = 0.1
        D_S, _, _ = d_single(reference_params, z)
        assert_allclose(D_S, 2.0 * z * z * 8.0 ** 2 * 8.5 ** 2 * 7.0 ** 2, rtol=1e-12)

    def test_stokes_over_one_period(self, reference_params):
        z = 0.1
        delta = 2.0 * np.pi / z
        params = apply_axis(reference_params, SweepAxisName.DK_S_Z, 2.0 * np.pi, z)
        assert abs(d_single(params, z)[0]) < 1e-12
        params = apply_axis(reference_params, SweepAxisName.DK_S_Z, np.pi, z)
        peak = 8.0 / (delta / 2.0) ** 2 * 8.0 ** 2 * 8.5 ** 2 * 7.0 ** 2
        assert_allclose(d_single(params, z)[0], peak, rtol=1e-12)

    @given(params=system_params(), z=lengths)
    @settings(max_examples=1000, deadline=None)
    def test_sign_laws(self, params, z):
        D_S, _, D_A = d_single(params, z)
        _, _, D_VA = d_pair(params, z)
        assert D_S >= 0.0
        assert D_A == 0.0
        assert D_VA <= 0.0


@pytest.mark.unit
class TestPairs:
    def test_phonon_anti_stokes_formula(self, mixed_params):
        z = 0.8
        delta = 1.3 - 0.2 + 0.5 + 1.7
        expected = (-2.0 * 0.06 ** 2 / delta ** 2 * (1.5 ** 2 + 1.1 ** 2 + 1.0)
                    * 1.3 ** 2 * 0.6 ** 2 * (1.0 - np.cos(delta * z)))
        assert_allclose(d_pair(mixed_params, z)[2], expected, rtol=1e-10)

    @given(params=system_params(), z=lengths,
           probes=st.lists(st.floats(min_value=0.0, max_value=0.1), min_size=6, max_size=6))
    @settings(max_examples=300, deadline=None)
    def test_probe_independence(self, params, z, probes):
        other = params.model_copy(update=dict(zip(PROBES, probes)))
        first = d_single(params, z) + d_pair(params, z)
        second = d_single(other, z) + d_pair(other, z)
        for index, key in enumerate(("S", "V", "A", "SV", "SA", "VA")):
            if key != "SV":
                assert first[index] == second[index]

    def test_stokes_phonon_depends_on_probes(self, mixed_params):
        z = 0.5
        quiet = mixed_params.model_copy(update={name: 0.0 for name in PROBES})
        assert d_pair(mixed_params, z)[0] != d_pair(quiet, z)[0]

    @pytest.mark.parametrize("curve", [0, 1])
    def test_stokes_anti_stokes_curves(self, curve):
        _, ratio, phase = FIG8_CURVES[curve]
        params = fig8_params(ratio, phase)
        values = np.array([d_pair(params, z)[1] for z in np.linspace(0.0, 0.3, 101)])
        if phase == 0.0:
            assert np.all(values <= 0.0)
        else:
            assert np.all(values >= 0.0)
        assert np.any(values != 0.0)


@pytest.mark.unit
class TestNormalization:
    def test_coherent_value(self):
        assert g2_normalize(0.0, 2.0, 3.0) == 1.0

    def test_half(self):
        assert_allclose(g2_normalize(-3.0, 2.0, 3.0), 0.5)

    def test_degenerate_mean(self):
        with pytest.raises(StatException.DegenerateMean):
            g2_normalize(0.1, 0.0, 1.0)

    def test_classify(self):
        assert classify(-1e-3) == StatClass.ANTIBUNCHED
        assert classify(0.0) == StatClass.UNBUNCHED
        assert classify(1e-3) == StatClass.BUNCHED


@pytest.mark.slow
class TestMomentEngine:
    def test_discriminants_match_closed_forms(self, mixed_params):
        z = 0.7
        closed = dict(zip(STAT_KEYS, d_single(mixed_params, z) + d_pair(mixed_params, z)))
        scale = 1.0 + max(abs(v) for v in closed.values())
        for key in STAT_KEYS:
            assert_allclose(moment_d(mixed_params, z, key), closed[key], rtol=1e-8, atol=1e-10 * scale)

    def test_zeno_matches_closed_forms(self, mixed_params):
        z = 0.7
        for scenario in (ProbeScenario.PUMP_PROBE, ProbeScenario.STOKES_PROBE,
                         ProbeScenario.ANTI_STOKES_PROBE, ProbeScenario.SPLIT_PROBE):
            engine = zeno_moments(mixed_params, z, scenario)
            closed = zeno_for_scenario(mixed_params, z, scenario)
            assert engine.source == "moments"
            for key in APPLICABLE[scenario]:
                assert_allclose(engine.Z[key], closed.Z[key], rtol=1e-8, atol=1e-12)

    def test_mean_number_at_zero_length(self, mixed_params):
        assert_allclose(mean_number(mixed_params, 0.0, "S"), 0.9 ** 2)

    def test_mean_number_rejects_pump(self, mixed_params):
        with pytest.raises(ParameterException.UnknownMode):
            mean_number(mixed_params, 0.1, "L1")


@pytest.mark.unit
class TestReport:
    def test_report_keys(self, reference_params):
        report = stat_report(reference_params, 0.1)
        assert set(report.D) == set(STAT_KEYS)
        assert report.g2 is None
        assert report.classification["A"] == StatClass.UNBUNCHED

    def test_g2_skips_empty_modes(self, reference_params):
        params = reference_params.model_copy(update={
            "amp": reference_params.amp.model_copy(update={"V": ModeAmplitude()})})
        report = stat_report(params, 0.0, with_g2=True)
        assert set(report.g2) == {"S", "A", "SA"}
        assert report.g2["S"] == 1.0
