"""
Domain Models Module

This module defines the enumerations shared across the toolkit: field modes,
probe-coupling scenarios, Zeno and photon-statistics classifications, sweep
axes and figure presets.

Author: Sasank Tanikella
Created: 10-16-2026
"""

from enum import Enum


class Mode(str, Enum):
    """
    The seven interacting modes, in oracle basis order.

    Attributes:
        P1, P2: probe waveguide modes
        L1, L2: pump modes
        S: Stokes mode
        V: phonon (vibration) mode
        A: anti-Stokes mode
    """
    P1 = "p1"
    P2 = "p2"
    L1 = "L1"
    L2 = "L2"
    S = "S"
    V = "V"
    A = "A"


# Modes whose Zeno parameters and statistics are reported
SCATTERED_MODES = (Mode.S, Mode.V, Mode.A)


class ProbeScenario(str, Enum):
    """
    Probe-coupling scenarios.

    Notes:
        - PumpProbe keeps Gamma only, StokesProbe keeps Lambda only,
          AntiStokesProbe keeps Omega only
        - SplitProbe keeps Lambda1 and Omega2
        - General leaves every coupling free
    """
    PUMP_PROBE = "PumpProbe"
    STOKES_PROBE = "StokesProbe"
    ANTI_STOKES_PROBE = "AntiStokesProbe"
    SPLIT_PROBE = "SplitProbe"
    GENERAL = "General"


class ZenoClass(str, Enum):
    QZE = "QZE"
    QAZE = "QAZE"
    NEUTRAL = "Neutral"
    NOT_APPLICABLE = "NA"


class StatClass(str, Enum):
    ANTIBUNCHED = "antibunched"
    UNBUNCHED = "unbunched"
    BUNCHED = "bunched"


class SweepAxisName(str, Enum):
    """
    Dimensionless sweep axes.

    Wavevector axes come in two forms: ``*_z`` is the product delta*z and
    ``*_g`` is the ratio delta/g used on figure axes.
    """
    DK_S_Z = "dk_S_z"
    DK_A_Z = "dk_A_z"
    DK_L_Z = "dk_L_z"
    DK_S_G = "dk_S_g"
    DK_A_G = "dk_A_g"
    DK_L_G = "dk_L_g"
    DTHETA_S = "dtheta_S"
    DTHETA_A = "dtheta_A"
    DTHETA = "dtheta"
    DPHI_L = "dphi_L"
    DPHI_L1 = "dphi_L1"
    DPHI_L2 = "dphi_L2"
    DPHI_S = "dphi_S"
    DPHI_A = "dphi_A"


class FigurePreset(str, Enum):
    FIG2A = "Fig2a"
    FIG2B = "Fig2b"
    FIG2C = "Fig2c"
    FIG3A = "Fig3a"
    FIG3B = "Fig3b"
    FIG3C = "Fig3c"
    FIG4A = "Fig4a"
    FIG4B = "Fig4b"
    FIG4C = "Fig4c"
    FIG4D = "Fig4d"
    FIG5A = "Fig5a"
    FIG5B = "Fig5b"
    FIG5C = "Fig5c"
    FIG5D = "Fig5d"
    FIG6A = "Fig6a"
    FIG6B = "Fig6b"
    FIG6C = "Fig6c"
    FIG6D = "Fig6d"
    FIG8 = "Fig8"
