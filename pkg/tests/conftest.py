"""
Shared fixtures and hypothesis strategies for the hrzeno test suite.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import numpy as np
import pytest
from hypothesis import strategies as st

from app.controllers.sweepController import figure_params
from app.schemas import ModeAmplitude, ModeAmplitudes, ModeValues, SystemParams
from app.simulation_config import MODE_ORDER

COUPLING_NAMES = ("g", "chi", "Gamma1", "Gamma2", "Lambda1", "Lambda2", "Omega1", "Omega2")


@pytest.fixture
def reference_params() -> SystemParams:
    """Reference figure values: g = 1, chi = 1.1, Gamma = 1.15, phase matched."""
    return figure_params()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20261016)


amplitudes = st.builds(
    ModeAmplitude,
    mag=st.floats(min_value=0.0, max_value=3.0),
    phase=st.floats(min_value=-np.pi, max_value=np.pi),
)


@st.composite
def system_params(draw, max_coupling: float = 0.1, max_k: float = 5.0) -> SystemParams:
    """Random configuration with couplings in [0, max_coupling]."""
    couplings = {name: draw(st.floats(min_value=0.0, max_value=max_coupling)) for name in COUPLING_NAMES}
    amp = ModeAmplitudes(**{mode: draw(amplitudes) for mode in MODE_ORDER})
    k = ModeValues(**{mode: draw(st.floats(min_value=-max_k, max_value=max_k)) for mode in MODE_ORDER})
    return SystemParams(k=k, amp=amp, **couplings)


lengths = st.floats(min_value=0.1, max_value=1.0)
