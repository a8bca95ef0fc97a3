"""The five spin-qubit models: channels, physical parameters, Hamiltonian coefficients.

Every qubit reduces to the universal 2x2 model
H/hbar = alpha0*I + alphax*sigma_x + alphaz*sigma_z, with coefficients
that are affine in the control-channel values.  ``coefficient_maps``
exposes that affine map explicitly (one constant 3-vector plus one
3-vector per channel); ``build_coeffs`` evaluates it for a concrete set
of control values.  All channel values are angular frequencies (rad/s).
"""

from __future__ import annotations

import enum
import math
import types
import warnings
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .constants import HBAR, MU_BOHR, joule_to_rad_per_s
from .errors import ConfigError, HighFieldApproximationWarning
from .su2 import HamiltonianCoeffs

__all__ = [
    "QubitType",
    "QubitSpec",
    "channel_order",
    "channel_kind",
    "build_coeffs",
    "coefficient_maps",
    "zeeman_energy",
    "donor_transition_frequencies",
    "exchange_from_hubbard",
]

_SQRT3_4 = math.sqrt(3.0) / 4.0


class QubitType(enum.Enum):
    """The five implementations: dot spin, singlet-triplet, hybrid, donor, spin-donor."""

    SQ = "sq"
    STQ = "stq"
    HQ = "hq"
    DQ = "dq"
    SDQ = "sdq"


# Control channels per qubit type, in canonical order.  The kind decides
# the configuration unit: "frequency" channels are given as omega/2pi in
# Hz, "energy" channels in eV.
_CHANNELS: dict[QubitType, tuple[tuple[str, str], ...]] = {
    QubitType.SQ: (("delta_omega_z", "frequency"), ("Omega_x", "frequency")),
    QubitType.STQ: (("J", "energy"), ("delta_E_z", "energy")),
    QubitType.HQ: (("J1", "energy"), ("J2", "energy"), ("Jprime", "energy")),
    QubitType.DQ: (("delta_omega_12", "frequency"), ("Omega_x", "frequency")),
    QubitType.SDQ: (("J", "energy"), ("A", "energy")),
}


def channel_order(qubit_type: QubitType) -> tuple[str, ...]:
    """Canonical channel names for a qubit type (fixes RNG draw order)."""
    return tuple(name for name, _ in _CHANNELS[qubit_type])


def channel_kind(qubit_type: QubitType, channel: str) -> str:
    for name, kind in _CHANNELS[qubit_type]:
        if name == channel:
            return kind
    raise ConfigError(f"unknown channel {channel!r} for {qubit_type.value}")


@dataclass(frozen=True)
class QubitSpec:
    """Physical parameters of one qubit.

    ``control_amplitudes`` maps each channel of the type to its pulse
    amplitude in rad/s (strictly positive).  ``gamma_n_over_2pi`` (Hz/T)
    is required for SDQ, where the nuclear Zeeman term enters the
    identity coefficient; it is optional elsewhere.  For the donor qubit
    ``nuclear_subspace`` selects which ESR transition the detuning
    refers to ("down" or "up"); the synthesis formulas are identical.
    """

    qubit_type: QubitType
    b0: float  # tesla
    control_amplitudes: Mapping[str, float]  # rad/s
    g_e: float = 2.0
    gamma_n_over_2pi: float | None = None  # Hz/T
    a_hyperfine: float | None = None  # rad/s
    nuclear_subspace: str = "down"

    def __post_init__(self):
        required = set(channel_order(self.qubit_type))
        given = set(self.control_amplitudes)
        if given - required:
            raise ConfigError(
                f"unknown channels for {self.qubit_type.value}: {sorted(given - required)}"
            )
        if required - given:
            raise ConfigError(
                f"missing channels for {self.qubit_type.value}: {sorted(required - given)}"
            )
        for name, value in self.control_amplitudes.items():
            if not (value > 0.0) or not math.isfinite(value):
                raise ConfigError(f"amplitude {name} must be > 0, got {value!r}")
        if self.qubit_type is QubitType.SDQ and self.gamma_n_over_2pi is None:
            raise ConfigError("SDQ requires gamma_n_over_2pi (Hz/T); it has no default")
        if self.nuclear_subspace not in ("down", "up"):
            raise ConfigError(f"nuclear_subspace must be 'down' or 'up', got {self.nuclear_subspace!r}")
        object.__setattr__(
            self, "control_amplitudes", types.MappingProxyType(dict(self.control_amplitudes))
        )

    def amplitude(self, channel: str) -> float:
        return self.control_amplitudes[channel]


def zeeman_energy(g_e: float, b0: float) -> float:
    """Spin splitting g_e * mu_B * B0 in joules."""
    if b0 < 0.0:
        raise ValueError(f"negative magnetic field: {b0!r}")
    return g_e * MU_BOHR * b0


def coefficient_maps(spec: QubitSpec) -> tuple[np.ndarray, np.ndarray]:
    """Affine map from channel values to (alpha0, alphax, alphaz).

    Returns ``(const, chan)`` with shapes (3,) and (n_channels, 3), both
    in rad/s, such that ``coeffs = const + values @ chan`` for channel
    values ordered as in :func:`channel_order`.
    """
    qt = spec.qubit_type
    if qt is QubitType.SQ or qt is QubitType.DQ:
        # detuning/2 on sigma_z, drive/2 on sigma_x, no identity term
        const = np.zeros(3)
        chan = np.array([[0.0, 0.0, 0.5], [0.0, 0.5, 0.0]])
    elif qt is QubitType.STQ:
        const = np.zeros(3)
        chan = np.array([[-0.25, 0.0, -0.5], [0.0, 1.0, 0.0]])  # J, delta_E_z
    elif qt is QubitType.HQ:
        ez = joule_to_rad_per_s(zeeman_energy(spec.g_e, spec.b0))
        const = np.array([-0.5 * ez, 0.0, 0.0])
        chan = np.array(
            [
                [-0.25, -_SQRT3_4, 0.25],  # J1
                [-0.25, _SQRT3_4, 0.25],  # J2
                [-0.25, 0.0, -0.5],  # Jprime
            ]
        )
    elif qt is QubitType.SDQ:
        gamma_n = 2.0 * math.pi * spec.gamma_n_over_2pi  # rad/s/T
        const = np.array([0.25 * gamma_n * spec.b0, 0.0, 0.0])
        chan = np.array([[-1.0 / 16.0, 0.0, -0.125], [0.0, 1.0 / 16.0, 0.0]])  # J, A
    else:  # pragma: no cover
        raise ConfigError(f"unknown qubit type {qt!r}")
    return const, chan


def build_coeffs(spec: QubitSpec, controls: Mapping[str, float]) -> HamiltonianCoeffs:
    """Hamiltonian coefficients for one pulse step with the given channel values (rad/s)."""
    order = channel_order(spec.qubit_type)
    extra = set(controls) - set(order)
    if extra:
        raise ConfigError(f"unknown channels for {spec.qubit_type.value}: {sorted(extra)}")
    missing = set(order) - set(controls)
    if missing:
        raise ConfigError(f"missing channels for {spec.qubit_type.value}: {sorted(missing)}")
    const, chan = coefficient_maps(spec)
    # sequential accumulation, same operation order as the Monte Carlo
    # kernels (and exact cancellation of mirrored terms, e.g. J1 = J2)
    a0, ax, az = const
    for c, name in enumerate(order):
        v = controls[name]
        a0 += v * chan[c, 0]
        ax += v * chan[c, 1]
        az += v * chan[c, 2]
    return HamiltonianCoeffs(alpha0=float(a0), alphax=float(ax), alphaz=float(az))


def donor_transition_frequencies(
    gamma_e: float, gamma_n: float, b0: float, a_hyperfine: float
) -> tuple[float, float]:
    """ESR frequencies of the nuclear-down and nuclear-up subspaces of a donor.

    All rates in rad/s (gyromagnetic ratios in rad/s/T).  In the
    high-field limit the electron transitions split into

        omega_12 = D- + sqrt(D+^2 + 4 a^2) - 2 a
        omega_34 = D- + sqrt(D+^2 + 4 a^2) + 2 a

    with D+- = (gamma_e +- gamma_n) B0 / 2 and a = A/4, so that
    omega_34 - omega_12 = A identically.
    """
    if b0 < 0.0:
        raise ValueError(f"negative magnetic field: {b0!r}")
    if gamma_e * b0 < 10.0 * a_hyperfine:
        warnings.warn(
            "gamma_e*B0 < 10*A: high-field approximation is marginal",
            HighFieldApproximationWarning,
            stacklevel=2,
        )
    d_plus = 0.5 * (gamma_e + gamma_n) * b0
    d_minus = 0.5 * (gamma_e - gamma_n) * b0
    a = 0.25 * a_hyperfine
    root = math.sqrt(d_plus * d_plus + 4.0 * a * a)
    omega_12 = d_minus + root - 2.0 * a
    # omega_34 = d_minus + root + 2a; adding A to omega_12 keeps the
    # splitting identity exact instead of losing it to cancellation
    return omega_12, omega_12 + a_hyperfine


def exchange_from_hubbard(
    t_tun: float, j_t: float, u: float, u_prime: float, delta_eps: float, j_e: float
) -> float:
    """Exchange coupling J = 4 (t - J_t)^2 / (U - U' - |d_eps|) - 2 J_e.

    All arguments in one consistent energy unit; the result may be
    negative.  The denominator must be positive.
    """
    denom = u - u_prime - abs(delta_eps)
    if denom <= 0.0:
        raise ValueError(f"non-positive Hubbard denominator: {denom!r}")
    diff = t_tun - j_t
    return 4.0 * diff * diff / denom - 2.0 * j_e
