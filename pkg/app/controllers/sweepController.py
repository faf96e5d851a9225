"""
Sweep Controller Module

This module evaluates Zeno parameters and antibunching discriminants over
grids of propagation length and up to two dimensionless axes, and binds the
figure presets to concrete sweeps.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import logging
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.controllers.modelController import apply_axis, check_validity, impose_special_mismatch
from app.controllers.photstatController import d_pair, d_single
from app.controllers.zenoController import zeno_case1_special_mismatch, zeno_for_scenario
from app.exceptions import SweepException
from app.models import FigurePreset, ProbeScenario, SweepAxisName
from app.schemas import (
    STAT_OUTPUTS, ZENO_OUTPUTS, FigureCurve, FigureSpec, ModeAmplitude, ModeAmplitudes,
    RangeSpec, SweepAxis, SweepSpec, SystemParams
)
from app.simulation_config import THREADS
from app.utils.workerPool import ordered_map

logger = logging.getLogger(__name__)

GridPoint = Tuple[float, Tuple[float, ...]]


def sweep_columns(spec: SweepSpec) -> List[str]:
    """Column names: z, the swept axes, then the requested outputs."""
    return ["z"] + [axis.name.value for axis in spec.axes] + list(spec.outputs)


def grid_points(spec: SweepSpec) -> List[GridPoint]:
    """Row-major grid: z outermost, the last axis varying fastest."""
    axis_values = [axis.values() for axis in spec.axes]
    return [
        (float(z), tuple(float(v) for v in values))
        for z in spec.z_values()
        for values in product(*axis_values)
    ]


def point_params(spec: SweepSpec, z: float, values: Sequence[float]) -> SystemParams:
    """Base parameters with every axis value realised at propagation length z."""
    params = spec.params
    for axis, value in zip(spec.axes, values):
        params = apply_axis(params, axis.name, value, z)
    if spec.special_mismatch:
        params = impose_special_mismatch(params)
    return params


def evaluate_point(spec: SweepSpec, point: GridPoint) -> List[Optional[float]]:
    """
    Evaluates the requested outputs at one grid point.

    Args:
        spec (SweepSpec): Sweep request
        point (GridPoint): (z, axis values)

    Returns:
        List[Optional[float]]: One value per output; None when the scenario
        does not report that Zeno component
    """
    z, values = point
    params = point_params(spec, z, values)
    row: Dict[str, Optional[float]] = {}

    if any(name in ZENO_OUTPUTS for name in spec.outputs):
        if spec.special_mismatch:
            report = zeno_case1_special_mismatch(params, z)
        else:
            report = zeno_for_scenario(params, z, spec.scenario)
        row.update({f"Z_{key}": value for key, value in report.Z.items()})

    if any(name in STAT_OUTPUTS for name in spec.outputs):
        D_S, D_V, D_A = d_single(params, z)
        D_SV, D_SA, D_VA = d_pair(params, z)
        row.update({"D_S": D_S, "D_V": D_V, "D_A": D_A, "D_SV": D_SV, "D_SA": D_SA, "D_VA": D_VA})

    return [z, *values] + [row[name] for name in spec.outputs]


def run_sweep(spec: SweepSpec, threads: int = THREADS, strict: bool = False) -> Tuple[List[str], List[list]]:
    """
    Evaluates a sweep specification.

    Args:
        spec (SweepSpec): Sweep request
        threads (int): Worker threads
        strict (bool): Abort on a hard validity violation at the largest z

    Returns:
        Tuple[List[str], List[list]]: Column names and rows in grid order

    Raises:
        ValidityException.HardViolation: strict and max |coupling*z| > hard limit
        SweepException.InvalidAxis: an axis cannot be realised (e.g. *_z at z = 0)
    """
    z_values = spec.z_values()
    check_validity(spec.params, float(np.max(np.abs(z_values))), strict=strict)
    points = grid_points(spec)
    logger.info("sweeping %d grid points on %d thread(s)", len(points), threads)
    rows = ordered_map(lambda point: evaluate_point(spec, point), points, threads)
    return sweep_columns(spec), rows


# ---------------------------------------------------------------------------
# Figure presets
# ---------------------------------------------------------------------------

PHASE_RANGE = (-np.pi, np.pi)
MISMATCH_RANGE = (0.0, 50.0)
GZ_FIXED = 0.1
SURFACE_POINTS = 61
LINE_POINTS = 101


def figure_params() -> SystemParams:
    """Shared reference parameters with g = 1, phase matched, zero phases."""
    return SystemParams(
        g=1.0,
        chi=1.1,
        Gamma1=1.15,
        Gamma2=1.15,
        amp=ModeAmplitudes(
            p1=ModeAmplitude(mag=5.0),
            p2=ModeAmplitude(mag=4.0),
            L1=ModeAmplitude(mag=8.0),
            L2=ModeAmplitude(mag=8.5),
            S=ModeAmplitude(mag=7.0),
            V=ModeAmplitude(mag=0.01),
            A=ModeAmplitude(mag=1.0),
        ),
    )


def _axis(name: SweepAxisName, bounds: Tuple[float, float], count: int = SURFACE_POINTS) -> SweepAxis:
    return SweepAxis(name=name, start=bounds[0], stop=bounds[1], count=count)


def _surface(preset: FigurePreset, title: str, output: str, axes: List[SweepAxis],
             gz: RangeSpec = RangeSpec(start=GZ_FIXED, stop=GZ_FIXED, count=1),
             params: Optional[SystemParams] = None, notes: Optional[str] = None,
             scenario: ProbeScenario = ProbeScenario.PUMP_PROBE) -> FigureSpec:
    sweep = SweepSpec(
        scenario=scenario,
        gz=gz,
        axes=axes,
        outputs=[output],
        params=params or figure_params(),
    )
    return FigureSpec(preset=preset, title=title, column=output,
                      curves=[FigureCurve(label=preset.value, sweep=sweep)], notes=notes)


def _gz_range() -> RangeSpec:
    return RangeSpec(start=0.0, stop=0.2, count=41)


def _zeno_phase_figures(preset_a, preset_b, preset_c, output, theta_axis, label) -> Dict[FigurePreset, Callable[[], FigureSpec]]:
    return {
        preset_a: lambda: _surface(
            preset_a, f"{label} vs gz and phase difference", output,
            [_axis(theta_axis, PHASE_RANGE)], gz=_gz_range()),
        preset_b: lambda: _surface(
            preset_b, f"{label} vs probe phase differences", output,
            [_axis(SweepAxisName.DPHI_L1, PHASE_RANGE), _axis(SweepAxisName.DPHI_L2, PHASE_RANGE)]),
        preset_c: lambda: _surface(
            preset_c, f"{label} vs common probe phase and phase difference", output,
            [_axis(SweepAxisName.DPHI_L, PHASE_RANGE), _axis(theta_axis, PHASE_RANGE)]),
    }


def _zeno_mismatch_figures(presets, output, dk_axis, theta_axis, label) -> Dict[FigurePreset, Callable[[], FigureSpec]]:
    preset_a, preset_b, preset_c, preset_d = presets
    return {
        preset_a: lambda: _surface(
            preset_a, f"{label} vs mismatch and gz", output,
            [_axis(dk_axis, MISMATCH_RANGE)], gz=_gz_range()),
        preset_b: lambda: _surface(
            preset_b, f"{label} vs mismatch and pump-probe mismatch", output,
            [_axis(dk_axis, MISMATCH_RANGE), _axis(SweepAxisName.DK_L_G, MISMATCH_RANGE)]),
        preset_c: lambda: _surface(
            preset_c, f"{label} vs mismatch and phase difference", output,
            [_axis(dk_axis, MISMATCH_RANGE), _axis(theta_axis, PHASE_RANGE)]),
        preset_d: lambda: _surface(
            preset_d, f"{label} vs pump-probe mismatch and phase difference", output,
            [_axis(SweepAxisName.DK_L_G, MISMATCH_RANGE), _axis(theta_axis, PHASE_RANGE)]),
    }


def _phonon_figures() -> Dict[FigurePreset, Callable[[], FigureSpec]]:
    shifted = apply_axis(figure_params(), SweepAxisName.DTHETA, np.pi, GZ_FIXED)
    return {
        FigurePreset.FIG6A: lambda: _surface(
            FigurePreset.FIG6A, "Z_V vs Stokes and anti-Stokes phase differences", "Z_V",
            [_axis(SweepAxisName.DTHETA_S, PHASE_RANGE), _axis(SweepAxisName.DTHETA_A, PHASE_RANGE)]),
        FigurePreset.FIG6B: lambda: _surface(
            FigurePreset.FIG6B, "Z_V vs common phase difference and probe phase", "Z_V",
            [_axis(SweepAxisName.DTHETA, PHASE_RANGE), _axis(SweepAxisName.DPHI_L, PHASE_RANGE)]),
        FigurePreset.FIG6C: lambda: _surface(
            FigurePreset.FIG6C, "Z_V vs Stokes and anti-Stokes mismatch", "Z_V",
            [_axis(SweepAxisName.DK_S_G, MISMATCH_RANGE), _axis(SweepAxisName.DK_A_G, MISMATCH_RANGE)],
            notes="dtheta = 0"),
        FigurePreset.FIG6D: lambda: _surface(
            FigurePreset.FIG6D, "Z_V vs Stokes and anti-Stokes mismatch", "Z_V",
            [_axis(SweepAxisName.DK_S_G, MISMATCH_RANGE), _axis(SweepAxisName.DK_A_G, MISMATCH_RANGE)],
            params=shifted, notes="dtheta = pi"),
    }


# Fig8 curves: (dk_A / dk_S, dtheta_S - dtheta_A)
FIG8_CURVES = (
    ("dkA=1.1dkS dtheta=0", 1.1, 0.0),
    ("dkA=1.1dkS dtheta=pi", 1.1, np.pi),
    ("dkA=0.9dkS dtheta=pi", 0.9, np.pi),
    ("dkA=0.9dkS dtheta=0", 0.9, 0.0),
)
FIG8_DK_S = 1e-2


def fig8_params(ratio: float, phase_difference: float) -> SystemParams:
    """Reference parameters with dk_S = 0.01 g, dk_A = ratio * dk_S and dtheta_S - dtheta_A set."""
    params = figure_params()
    params = apply_axis(params, SweepAxisName.DK_S_G, FIG8_DK_S, 0.0)
    params = apply_axis(params, SweepAxisName.DK_A_G, ratio * FIG8_DK_S, 0.0)
    return apply_axis(params, SweepAxisName.DTHETA_S, phase_difference, 0.0)


def _fig8() -> FigureSpec:
    curves = [
        FigureCurve(label=label, sweep=SweepSpec(
            gz=RangeSpec(start=0.0, stop=0.3, count=LINE_POINTS),
            outputs=["D_SA"],
            params=fig8_params(ratio, phase),
        ))
        for label, ratio, phase in FIG8_CURVES
    ]
    return FigureSpec(
        preset=FigurePreset.FIG8,
        title="Stokes-anti-Stokes antibunching D_SA",
        column="D_SA",
        curves=curves,
        notes="; ".join(f"curve {i + 1}: {label}" for i, (label, _, _) in enumerate(FIG8_CURVES)),
    )


FIGURE_PRESETS: Dict[FigurePreset, Callable[[], FigureSpec]] = {
    **_zeno_phase_figures(FigurePreset.FIG2A, FigurePreset.FIG2B, FigurePreset.FIG2C,
                          "Z_S", SweepAxisName.DTHETA_S, "Z_S"),
    **_zeno_phase_figures(FigurePreset.FIG3A, FigurePreset.FIG3B, FigurePreset.FIG3C,
                          "Z_A", SweepAxisName.DTHETA_A, "Z_A"),
    **_zeno_mismatch_figures((FigurePreset.FIG4A, FigurePreset.FIG4B, FigurePreset.FIG4C, FigurePreset.FIG4D),
                             "Z_S", SweepAxisName.DK_S_G, SweepAxisName.DTHETA_S, "Z_S"),
    **_zeno_mismatch_figures((FigurePreset.FIG5A, FigurePreset.FIG5B, FigurePreset.FIG5C, FigurePreset.FIG5D),
                             "Z_A", SweepAxisName.DK_A_G, SweepAxisName.DTHETA_A, "Z_A"),
    **_phonon_figures(),
    FigurePreset.FIG8: _fig8,
}


def figure_spec(preset) -> FigureSpec:
    """
    Looks up a figure preset.

    Raises:
        SweepException.UnknownPreset: preset is not registered
    """
    try:
        return FIGURE_PRESETS[FigurePreset(preset)]()
    except (ValueError, KeyError):
        raise SweepException.UnknownPreset(f"unknown figure preset {preset!r}")


def run_figure(preset, threads: int = THREADS) -> Tuple[FigureSpec, List[str], List[list]]:
    """
    Evaluates every curve of a preset.

    Returns:
        Tuple[FigureSpec, List[str], List[list]]: The preset, column names
        (curve index first) and rows
    """
    spec = figure_spec(preset)
    columns: List[str] = []
    rows: List[list] = []
    for index, curve in enumerate(spec.curves, start=1):
        names, curve_rows = run_sweep(curve.sweep, threads)
        columns = ["curve"] + names
        rows.extend([index] + row for row in curve_rows)
    logger.info("figure %s: %d curve(s), %d rows", spec.preset.value, len(spec.curves), len(rows))
    return spec, columns, rows


def plot_script(spec: FigureSpec, columns: Sequence[str], data_file: str) -> str:
    """
    Gnuplot script that redraws a preset from its CSV file.

    Line figures plot the output against z, one line per curve; surfaces
    are drawn as a colour map over the two varying coordinates.
    """
    value = columns.index(spec.column) + 1
    sweep = spec.curves[0].sweep
    lines = [
        f"# {spec.preset.value}: {spec.title}",
        "set datafile separator ','",
        "set datafile commentschars '#'",
        f"set title '{spec.title}'",
        "set key autotitle columnhead",
    ]
    if not sweep.axes:
        lines += [
            "set xlabel 'z'",
            f"set ylabel '{spec.column}'",
            "plot " + ", \\\n     ".join(
                f"'{data_file}' using 2:($1=={index} ? ${value} : 1/0) "
                f"with lines title '{curve.label}'"
                for index, curve in enumerate(spec.curves, start=1)
            ),
        ]
    else:
        if len(sweep.axes) == 2:
            x, y = 3, 4
            xlabel, ylabel = sweep.axes[0].name.value, sweep.axes[1].name.value
        else:
            x, y = 3, 2
            xlabel, ylabel = sweep.axes[0].name.value, "z"
        lines += [
            "set view map",
            f"set xlabel '{xlabel}'",
            f"set ylabel '{ylabel}'",
            f"set cblabel '{spec.column}'",
            f"splot '{data_file}' using {x}:{y}:{value} with points pointtype 5 pointsize 0.5 palette notitle",
        ]
    return "\n".join(lines) + "\n"
