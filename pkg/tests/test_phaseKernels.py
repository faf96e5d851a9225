"""
Tests for the phase kernels and their removable singularities.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from app.simulation_config import SERIES_THRESHOLD
from app.utils.phaseKernels import (
    divided_difference2, linear_kernel, mixed_kernel, phi1, phi2, quadratic_kernel, sinc_squared_half
)

mismatches = st.floats(min_value=-20.0, max_value=20.0).filter(lambda d: abs(d) > 1e-2)
lengths = st.floats(min_value=0.05, max_value=2.0)


@pytest.mark.unit
class TestClosedForms:
    @given(delta=mismatches, z=lengths)
    @settings(max_examples=200, deadline=None)
    def test_linear_kernel_matches_rational_form(self, delta, z):
        expected = (1.0 - np.exp(-1j * delta * z)) / delta
        assert_allclose(linear_kernel(delta, z), expected, rtol=1e-10, atol=1e-14)

    @given(delta=mismatches, z=lengths)
    @settings(max_examples=200, deadline=None)
    def test_quadratic_kernel_matches_rational_form(self, delta, z):
        expected = (np.exp(-1j * delta * z) + 1j * delta * z - 1.0) / delta ** 2
        assert_allclose(quadratic_kernel(delta, z), expected, rtol=1e-8, atol=1e-12)

    @given(d1=mismatches, d2=mismatches, z=lengths)
    @settings(max_examples=200, deadline=None)
    def test_mixed_kernel_matches_rational_form(self, d1, d2, z):
        total = d1 + d2
        if abs(total) < 1e-2:
            return
        expected = (d1 * np.exp(-1j * z * total) - total * np.exp(-1j * z * d1) + d2) / (d1 * total * d2)
        assert_allclose(mixed_kernel(d1, d2, z), expected, rtol=1e-7, atol=1e-10)


@pytest.mark.unit
class TestLimits:
    def test_phase_matched_values(self):
        z = 0.7
        assert_allclose(linear_kernel(0.0, z), 1j * z)
        assert_allclose(quadratic_kernel(0.0, z), -z * z / 2.0)
        assert_allclose(mixed_kernel(0.0, 0.0, z), -z * z / 2.0)

    def test_series_branches_at_zero(self):
        assert phi1(0.0) == 1.0
        assert phi2(0.0) == 0.5
        assert_allclose(divided_difference2(0.0, 0.0), 0.5)

    @pytest.mark.parametrize("x", [SERIES_THRESHOLD * 0.999, SERIES_THRESHOLD * 1.001])
    def test_phi_continuous_across_threshold(self, x):
        arg = -1j * x
        assert_allclose(phi1(arg), np.expm1(arg) / arg, rtol=1e-12)
        assert_allclose(phi2(arg), 0.5 + arg / 6.0 + arg ** 2 / 24.0, rtol=1e-10)

    def test_mixed_kernel_at_cancelling_mismatches(self):
        # K(d, -d) reduces to Q(d)
        for delta in (1e-9, 0.3, 4.0):
            assert_allclose(mixed_kernel(delta, -delta, 1.3), quadratic_kernel(delta, 1.3), rtol=1e-10)

    def test_mixed_kernel_with_one_vanishing_mismatch(self):
        z, delta = 0.9, 2.5
        near = mixed_kernel(delta, 1e-10, z)
        assert_allclose(mixed_kernel(delta, 0.0, z), near, rtol=1e-8)
        near = mixed_kernel(1e-10, delta, z)
        assert_allclose(mixed_kernel(0.0, delta, z), near, rtol=1e-8)


@pytest.mark.unit
class TestIdentities:
    @given(a=st.floats(min_value=-10, max_value=10), b=st.floats(min_value=-10, max_value=10), z=lengths)
    @settings(max_examples=200, deadline=None)
    def test_product_of_linear_kernels(self, a, b, z):
        product = linear_kernel(a, z) * linear_kernel(b, z)
        assert_allclose(product, mixed_kernel(a, b, z) + mixed_kernel(b, a, z), rtol=1e-9, atol=1e-12)

    @given(a=st.floats(min_value=-10, max_value=10), b=st.floats(min_value=-10, max_value=10), z=lengths)
    @settings(max_examples=100, deadline=None)
    def test_mixed_kernel_conjugation(self, a, b, z):
        assert_allclose(np.conj(mixed_kernel(a, b, z)), mixed_kernel(-a, -b, z), rtol=1e-10, atol=1e-14)

    @given(d=st.floats(min_value=-10, max_value=10), z=lengths)
    @settings(max_examples=100, deadline=None)
    def test_linear_kernel_reflection(self, d, z):
        assert_allclose(linear_kernel(-d, z), -np.conj(linear_kernel(d, z)), rtol=1e-12, atol=1e-15)

    def test_one_minus_cosine_from_quadratic_kernel(self):
        z, delta = 1.1, 3.0
        assert_allclose(-quadratic_kernel(delta, z).real, (1.0 - np.cos(delta * z)) / delta ** 2, rtol=1e-12)

    def test_sinc_squared_half(self):
        assert sinc_squared_half(0.0) == 1.0
        assert_allclose(sinc_squared_half(2.0 * np.pi), 0.0, atol=1e-30)
        assert_allclose(sinc_squared_half(np.pi), (2.0 / np.pi) ** 2)
