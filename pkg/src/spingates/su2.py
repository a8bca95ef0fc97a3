"""Exact 2x2 complex matrix algebra for single-qubit gates.

Unitaries are plain (2, 2) complex128 numpy arrays.  All generators are
of the form H/hbar = alpha0*I + alphax*sigma_x + alphaz*sigma_z, so the
matrix exponential has the closed (Rodrigues-style) form

    exp(-i H t / hbar) = e^{-i alpha0 t} [cos(r t) I
                          - i sin(r t)/r (alphax sigma_x + alphaz sigma_z)]

with r = sqrt(alphax^2 + alphaz^2); the r -> 0 limit is taken
analytically (sin(r t)/r -> t), so the expression is branch-free.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "HamiltonianCoeffs",
    "rotation_z",
    "rotation_x",
    "expm_su2",
    "entanglement_fidelity",
]


@dataclass(frozen=True)
class HamiltonianCoeffs:
    """Coefficients of H/hbar = alpha0*I + alphax*sigma_x + alphaz*sigma_z, in rad/s."""

    alpha0: float
    alphax: float
    alphaz: float

    def __post_init__(self):
        for name in ("alpha0", "alphax", "alphaz"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite, got {getattr(self, name)!r}")


def rotation_z(theta: float) -> np.ndarray:
    """Bloch-sphere rotation about z: diag(e^{-i theta/2}, e^{+i theta/2})."""
    half = 0.5 * theta
    return np.array(
        [[cmath.exp(-1j * half), 0.0], [0.0, cmath.exp(1j * half)]],
        dtype=complex,
    )


def rotation_x(phi: float) -> np.ndarray:
    """Bloch-sphere rotation about x: cos(phi/2) I - i sin(phi/2) sigma_x."""
    c = math.cos(0.5 * phi)
    s = math.sin(0.5 * phi)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def expm_su2(coeffs: HamiltonianCoeffs, t: float) -> np.ndarray:
    """Evolution operator exp(-i (alpha0 I + alphax sigma_x + alphaz sigma_z) t).

    ``t`` must be non-negative (durations of physical pulse steps).
    """
    if t < 0.0:
        raise ValueError(f"negative evolution time: {t!r}")
    a0, ax, az = coeffs.alpha0, coeffs.alphax, coeffs.alphaz
    r = math.sqrt(ax * ax + az * az)
    cr = math.cos(r * t)
    # sin(r t)/r with its analytic r -> 0 limit
    snc = math.sin(r * t) / r if r > 0.0 else t
    phase = cmath.exp(-1j * a0 * t)
    return np.array(
        [
            [phase * (cr - 1j * snc * az), phase * (-1j * snc * ax)],
            [phase * (-1j * snc * ax), phase * (cr + 1j * snc * az)],
        ],
        dtype=complex,
    )


def entanglement_fidelity(u_ideal: np.ndarray, u_disturbed: np.ndarray) -> float:
    """Entanglement fidelity |tr(U_ideal^dag U_disturbed)|^2 / 4, clipped to [0, 1].

    Equals 1 iff the two unitaries agree up to a global phase.
    """
    tr = (
        u_ideal[0, 0].conjugate() * u_disturbed[0, 0]
        + u_ideal[0, 1].conjugate() * u_disturbed[0, 1]
        + u_ideal[1, 0].conjugate() * u_disturbed[1, 0]
        + u_ideal[1, 1].conjugate() * u_disturbed[1, 1]
    )
    f = 0.25 * (tr.real * tr.real + tr.imag * tr.imag)
    return min(1.0, max(0.0, f))
