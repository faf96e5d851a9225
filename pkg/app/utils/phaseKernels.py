"""
Phase Kernels Module

This module provides the three kernels every coefficient and closed form is
built from:

    E(d)      = (1 - exp(-i d z)) / d
    Q(d)      = (exp(-i d z) + i d z - 1) / d**2
    K(d1, d2) = (d1 exp(-i z (d1 + d2)) - (d1 + d2) exp(-i z d1) + d2)
                / (d1 (d1 + d2) d2)

They are written through the entire functions phi1, phi2 and the second
divided difference of exp, so every removable singularity is filled by a
Taylor branch:

    E(d) = i z phi1(-i d z)
    Q(d) = -z**2 phi2(-i d z)
    K(d1, d2) = -z**2 exp[0, -i z d1, -i z (d1 + d2)]

Author: Sasank Tanikella
Created: 10-16-2026
"""

import numpy as np

from app.simulation_config import SERIES_THRESHOLD


def phi1(x: complex) -> complex:
    """(exp(x) - 1) / x, with phi1(0) = 1."""
    if abs(x) < SERIES_THRESHOLD:
        return 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0
    return complex(np.expm1(x) / x)


def phi2(x: complex) -> complex:
    """(exp(x) - 1 - x) / x**2, with phi2(0) = 1/2."""
    if abs(x) < SERIES_THRESHOLD:
        return 0.5 + x / 6.0 + x * x / 24.0 + x * x * x / 120.0
    return complex((np.expm1(x) - x) / (x * x))


def divided_difference2(a: complex, b: complex) -> complex:
    """
    Second divided difference of exp on the nodes (0, a, b).

    Args:
        a (complex): Second node
        b (complex): Third node

    Returns:
        complex: exp[0, a, b], symmetric in its nodes

    Notes:
        - When all nodes lie within the series threshold of each other the
          four-term Taylor expansion around 0 is used
        - Otherwise the two farthest nodes become the outer nodes so the
          final division is by the largest separation; nearly coincident
          inner nodes are handled by phi1
    """
    nodes = (0j, complex(a), complex(b))
    pairs = ((0, 1), (0, 2), (1, 2))
    i, j = max(pairs, key=lambda p: abs(nodes[p[0]] - nodes[p[1]]))
    spread = abs(nodes[i] - nodes[j])
    if spread < SERIES_THRESHOLD:
        a, b = nodes[1], nodes[2]
        return (0.5 + (a + b) / 6.0 + (a * a + a * b + b * b) / 24.0
                + (a ** 3 + a * a * b + a * b * b + b ** 3) / 120.0)
    x0, x2 = nodes[i], nodes[j]
    x1 = nodes[3 - i - j]
    first = complex(np.exp(x1)) * phi1(x2 - x1)
    second = complex(np.exp(x0)) * phi1(x1 - x0)
    return (first - second) / (x2 - x0)


def linear_kernel(delta: float, z: float) -> complex:
    """E(delta) = (1 - exp(-i delta z)) / delta; tends to i z."""
    return 1j * z * phi1(-1j * delta * z)


def quadratic_kernel(delta: float, z: float) -> complex:
    """Q(delta) = (exp(-i delta z) + i delta z - 1) / delta**2; tends to -z**2/2."""
    return -z * z * phi2(-1j * delta * z)


def mixed_kernel(delta1: float, delta2: float, z: float) -> complex:
    """
    Two-mismatch kernel K(delta1, delta2).

    Args:
        delta1 (float): Mismatch of the inner process
        delta2 (float): Mismatch of the outer process
        z (float): Propagation length

    Returns:
        complex: K(delta1, delta2); equals -z**2/2 when both vanish

    Notes:
        - K(d, -d) equals quadratic_kernel(d)
        - E(a) E(b) = K(a, b) + K(b, a)
    """
    return -z * z * divided_difference2(-1j * delta1 * z, -1j * (delta1 + delta2) * z)


def sinc_squared_half(x: float) -> float:
    """sinc**2(x/2) with sinc(u) = sin(u)/u."""
    return float(np.sinc(x / (2.0 * np.pi)) ** 2)
