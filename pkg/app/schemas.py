"""
Pydantic Schemas Module

This module defines the Pydantic models for parameter files, derived phase
quantities, coefficient tables, reports and sweep specifications. All models
are immutable so they can be shared freely between sweep worker threads.

Author: Sasank Tanikella
Created: 10-16-2026
"""

from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from app.models import FigurePreset, Mode, ProbeScenario, StatClass, SweepAxisName, ZenoClass
from app.simulation_config import CLASSIFY_TOL, DEFAULT_DIMS, MAX_STATES, MODE_ORDER, TOL_TRUNCATION, Z_STEPS


def canonical_phase(value: float) -> float:
    """
    Maps a phase onto (-pi, pi].

    Phases already inside the interval are returned untouched so that
    parameter files round-trip bit-exactly.
    """
    if -np.pi < value <= np.pi:
        return float(value)
    return float(np.pi - np.mod(np.pi - value, 2.0 * np.pi))


class ModeAmplitude(BaseModel):
    """
    Polar form of a coherent amplitude.

    Attributes:
        mag (float): Magnitude, nonnegative
        phase (float): Phase in radians, canonicalized to (-pi, pi]
    """
    mag: float = Field(default=0.0, ge=0.0)
    phase: float = 0.0

    @field_validator("phase")
    @classmethod
    def _canonical(cls, value: float) -> float:
        return canonical_phase(value)

    @property
    def value(self) -> complex:
        return complex(self.mag * np.exp(1j * self.phase))

    class Config:
        frozen = True
        allow_inf_nan = False


class ModeValues(BaseModel):
    """Real per-mode values (wavevectors), keyed by mode name."""
    p1: float = 0.0
    p2: float = 0.0
    L1: float = 0.0
    L2: float = 0.0
    S: float = 0.0
    V: float = 0.0
    A: float = 0.0

    def get(self, mode: Any) -> float:
        return getattr(self, Mode(mode).value)

    class Config:
        frozen = True
        allow_inf_nan = False


class ModeAmplitudes(BaseModel):
    """Coherent amplitudes of the seven modes, keyed by mode name."""
    p1: ModeAmplitude = ModeAmplitude()
    p2: ModeAmplitude = ModeAmplitude()
    L1: ModeAmplitude = ModeAmplitude()
    L2: ModeAmplitude = ModeAmplitude()
    S: ModeAmplitude = ModeAmplitude()
    V: ModeAmplitude = ModeAmplitude()
    A: ModeAmplitude = ModeAmplitude()

    def get(self, mode: Any) -> ModeAmplitude:
        return getattr(self, Mode(mode).value)

    class Config:
        frozen = True


class SystemParamsBase(BaseModel):
    """
    Coupling constants of one physical configuration.

    Attributes:
        g (float): Stokes coupling (inverse length)
        chi (float): anti-Stokes coupling (inverse length)
        Gamma1, Gamma2 (float): pump-probe couplings
        Lambda1, Lambda2 (float): Stokes-probe couplings
        Omega1, Omega2 (float): anti-Stokes-probe couplings
    """
    g: float = Field(default=0.0, ge=0.0)
    chi: float = Field(default=0.0, ge=0.0)
    Gamma1: float = 0.0
    Gamma2: float = 0.0
    Lambda1: float = 0.0
    Lambda2: float = 0.0
    Omega1: float = 0.0
    Omega2: float = 0.0

    class Config:
        frozen = True
        allow_inf_nan = False


class SystemParams(SystemParamsBase):
    """
    Complete configuration: couplings, wavevectors and coherent amplitudes.

    Extends SystemParamsBase to include:
        k (ModeValues): wavevector per mode
        amp (ModeAmplitudes): initial coherent amplitude per mode
    """
    k: ModeValues = ModeValues()
    amp: ModeAmplitudes = ModeAmplitudes()

    @property
    def gamma_probe(self) -> Tuple[float, float]:
        return (self.Gamma1, self.Gamma2)

    @property
    def lambda_probe(self) -> Tuple[float, float]:
        return (self.Lambda1, self.Lambda2)

    @property
    def omega_probe(self) -> Tuple[float, float]:
        return (self.Omega1, self.Omega2)

    def amplitude(self, mode: Any) -> complex:
        return self.amp.get(mode).value

    def magnitude(self, mode: Any) -> float:
        return self.amp.get(mode).mag

    def couplings(self) -> Dict[str, float]:
        return {
            "g": self.g, "chi": self.chi,
            "Gamma1": self.Gamma1, "Gamma2": self.Gamma2,
            "Lambda1": self.Lambda1, "Lambda2": self.Lambda2,
            "Omega1": self.Omega1, "Omega2": self.Omega2,
        }


class DerivedPhases(BaseModel):
    """
    Phase mismatches and phase differences consumed by every formula.

    Attributes:
        dk_S, dk_A (float): Stokes and anti-Stokes mismatches
        dk_L, dk_Sj, dk_Aj (Tuple[float, float]): probe mismatches per probe
        dtheta_S, dtheta_A (float): process phase differences
        dphi_L, dphi_S, dphi_A (Tuple[float, float]): probe phase differences
    """
    dk_S: float
    dk_A: float
    dk_L: Tuple[float, float]
    dk_Sj: Tuple[float, float]
    dk_Aj: Tuple[float, float]
    dtheta_S: float
    dtheta_A: float
    dphi_L: Tuple[float, float]
    dphi_S: Tuple[float, float]
    dphi_A: Tuple[float, float]

    class Config:
        frozen = True


class CoefficientSet(BaseModel):
    """
    Second-order coefficient tables evaluated at one propagation length.

    Arrays keep the table numbering: index 0 is unused (NaN), so ``l[2]`` is
    the coefficient of the first Stokes generation term.
    """
    z: float
    l: np.ndarray
    m: np.ndarray
    n: np.ndarray

    class Config:
        frozen = True
        arbitrary_types_allowed = True


class CaseIStrengths(BaseModel):
    """
    Pump-probe strengths.

    Attributes:
        C (Tuple[float, float]): 4 g Gamma_j |a_pj| |a_L(j+1)| |beta| |gamma|
        D (Tuple[float, float]): anti-Stokes counterparts with chi and |delta|
    """
    C: Tuple[float, float]
    D: Tuple[float, float]


class ProbeStrengths(BaseModel):
    """Stokes-probe (CS) and anti-Stokes-probe (DA) strengths."""
    CS: Tuple[float, float]
    DA: Tuple[float, float]


class ZenoReport(BaseModel):
    """
    Zeno parameters for the scattered modes.

    Attributes:
        scenario (ProbeScenario): Coupling scenario evaluated
        z (float): Propagation length
        Z (Dict[str, Optional[float]]): Values keyed S, V, A; None when the
            mode is itself probed
        classification (Dict[str, ZenoClass]): QZE, QAZE, Neutral or NA
        tol (float): Classification tolerance
        residue (float): Imaginary residue of the real-valued expressions
        source (str): Evaluator that produced the values
    """
    scenario: ProbeScenario
    z: float
    Z: Dict[str, Optional[float]]
    classification: Dict[str, ZenoClass]
    tol: float = CLASSIFY_TOL
    residue: float = 0.0
    source: str = "analytic"


class StatReport(BaseModel):
    """
    Photon-statistics discriminants.

    Attributes:
        z (float): Propagation length
        D (Dict[str, float]): Keys S, V, A, SV, SA, VA
        g2 (Optional[Dict[str, float]]): Normalized correlations when mean
            numbers are available
        classification (Dict[str, StatClass]): Bunching class per key
    """
    z: float
    D: Dict[str, float]
    g2: Optional[Dict[str, float]] = None
    classification: Dict[str, StatClass]
    tol: float = CLASSIFY_TOL
    source: str = "analytic"


class FockConfig(BaseModel):
    """
    Truncation settings for the Fock-space oracle.

    Attributes:
        dims (Tuple[int, ...]): Dimension per mode in basis order
        z_steps (int): Evolution substeps
        tol_truncation (float): Certification tolerance
        max_states (int): Basis-size budget
    """
    dims: Tuple[int, int, int, int, int, int, int] = DEFAULT_DIMS
    z_steps: int = Field(default=Z_STEPS, ge=1)
    tol_truncation: float = Field(default=TOL_TRUNCATION, gt=0.0)
    max_states: int = Field(default=MAX_STATES, ge=1)

    @field_validator("dims")
    @classmethod
    def _dims_at_least_two(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(d < 2 for d in value):
            raise ValueError("every truncation dimension must be at least 2")
        return value

    @property
    def basis_size(self) -> int:
        return int(np.prod(self.dims))

    def dim(self, mode: Any) -> int:
        return self.dims[MODE_ORDER.index(Mode(mode).value)]

    def grown(self, step: int = 2) -> "FockConfig":
        return self.model_copy(update={"dims": tuple(d + step for d in self.dims)})

    class Config:
        frozen = True


class FockState(BaseModel):
    """State vector over the tensor-product basis (p1, p2, L1, L2, S, V, A)."""
    vector: np.ndarray
    dims: Tuple[int, ...]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def tensor(self) -> np.ndarray:
        return self.vector.reshape(self.dims)

    class Config:
        frozen = True
        arbitrary_types_allowed = True


class FockOperator(BaseModel):
    """Sparse operator in the oracle basis."""
    matrix: Any
    dims: Tuple[int, ...]
    hermitian: bool = True

    class Config:
        frozen = True
        arbitrary_types_allowed = True


class TruncationReport(BaseModel):
    """
    Outcome of a truncation-convergence check.

    Attributes:
        certified (bool): True when every observable moved less than tol
        max_change (float): Largest observable change between dims and dims+2
        dims (Tuple[int, ...]): Dims that were certified (or tried)
        changes (Dict[str, float]): Change per observable
        growth (List[str]): Modes whose top level carries more than tol weight
        reason (Optional[str]): Why certification was refused
    """
    certified: bool
    max_change: float
    dims: Tuple[int, ...]
    changes: Dict[str, float] = {}
    growth: List[str] = []
    reason: Optional[str] = None


class RangeSpec(BaseModel):
    """Linear grid: count points from start to stop inclusive."""
    start: float
    stop: float
    count: int = Field(default=1, ge=1)

    def values(self) -> np.ndarray:
        if self.count == 1:
            return np.array([self.start])
        return np.linspace(self.start, self.stop, self.count)

    class Config:
        frozen = True
        allow_inf_nan = False


class SweepAxis(RangeSpec):
    """A swept axis; needs at least two points."""
    name: SweepAxisName
    count: int = Field(default=2, ge=2)


ZENO_OUTPUTS = ("Z_S", "Z_V", "Z_A")
STAT_OUTPUTS = ("D_S", "D_V", "D_A", "D_SV", "D_SA", "D_VA")


class SweepSpec(BaseModel):
    """
    Grid evaluation request.

    Attributes:
        scenario (ProbeScenario): Closed form used for Zeno columns
        z (Optional[RangeSpec]): Propagation lengths
        gz (Optional[RangeSpec]): Propagation lengths in units of 1/g
        axes (List[SweepAxis]): Up to two distinct swept axes
        outputs (List[str]): Columns among Z_S..Z_A and D_S..D_VA
        special_mismatch (bool): Use the constrained special-mismatch form
        params (SystemParams): Base configuration
    """
    scenario: ProbeScenario = ProbeScenario.PUMP_PROBE
    z: Optional[RangeSpec] = None
    gz: Optional[RangeSpec] = None
    axes: List[SweepAxis] = []
    outputs: List[str] = list(ZENO_OUTPUTS)
    special_mismatch: bool = False
    params: SystemParams = SystemParams()

    @field_validator("outputs")
    @classmethod
    def _known_outputs(cls, value: List[str]) -> List[str]:
        unknown = [name for name in value if name not in ZENO_OUTPUTS + STAT_OUTPUTS]
        if unknown or not value:
            raise ValueError(f"unknown or empty outputs: {unknown}")
        return value

    @model_validator(mode="after")
    def _check_grid(self) -> "SweepSpec":
        if (self.z is None) == (self.gz is None):
            raise ValueError("exactly one of z or gz must be given")
        if self.gz is not None and self.params.g <= 0.0:
            raise ValueError("a gz range needs g > 0")
        names = [axis.name for axis in self.axes]
        if len(names) > 2 or len(set(names)) != len(names):
            raise ValueError("at most two distinct sweep axes are allowed")
        return self

    def z_values(self) -> np.ndarray:
        if self.z is not None:
            return self.z.values()
        return self.gz.values() / self.params.g

    class Config:
        frozen = True


class FigureCurve(BaseModel):
    """One labelled sweep inside a figure preset."""
    label: str
    sweep: SweepSpec


class FigureSpec(BaseModel):
    """
    Figure preset binding.

    Attributes:
        preset (FigurePreset): Preset identifier
        title (str): Figure title written into the plot script
        column (str): Output column plotted
        curves (List[FigureCurve]): One surface sweep, or several line sweeps
        notes (Optional[str]): Metadata emitted in the CSV header
    """
    preset: FigurePreset
    title: str
    column: str
    curves: List[FigureCurve]
    notes: Optional[str] = None


class ValidationCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""
    value: Optional[float] = None


class ValidationReport(BaseModel):
    """Pass/fail table of the validation suite."""
    level: str
    checks: List[ValidationCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
