"""Built-in parameter presets.

``paper-2018`` collects per-qubit magnetic fields and control amplitudes
from the experimental literature; ``paper-tab5`` the matching control
error standard deviations.  Frequency-like entries (``*_Hz``) are
omega/2pi values; energy-like entries (``*_eV``) are plain energies.
The hybrid qubit is configured through a single ``Jmax_eV`` knob:
J1 = J2 = Jmax pulse between 0 and Jmax while Jprime idles at Jmax/2,
and one ``sigma_J_eV`` applies to each of the three exchange channels
independently.
"""

from __future__ import annotations

import math
from typing import Mapping

from .constants import ev_to_rad_per_s, hz_to_rad_per_s
from .errors import ConfigError
from .noise import NoiseSpec
from .qubits import QubitSpec, QubitType

__all__ = [
    "QUBIT_PRESETS",
    "NOISE_PRESETS",
    "qubit_spec_from_params",
    "noise_spec_from_params",
    "qubit_config_fields",
    "noise_config_fields",
]

QUBIT_PRESETS: dict[str, dict[str, dict[str, float]]] = {
    "paper-2018": {
        "sq": {"B0_tesla": 1.2, "g_e": 2.0, "Omega_x_Hz": 5e6, "delta_omega_z_Hz": 20e6},
        "stq": {"B0_tesla": 0.03, "g_e": 2.0, "J_eV": 700e-9, "delta_E_z_eV": 32e-9},
        "hq": {"B0_tesla": 0.03, "g_e": 2.0, "Jmax_eV": 1e-6},
        "dq": {"B0_tesla": 1.5, "g_e": 2.0, "Omega_x_Hz": 500e3, "delta_omega_12_Hz": 2e6},
        "sdq": {
            "B0_tesla": 0.3,
            "g_e": 2.0,
            "J_eV": 100e-9,
            "A_eV": 400e-9,
            # nuclear gyromagnetic ratio over 2pi, Hz/T; enters only a
            # global-phase term, the literature parameter set leaves it open
            "gamma_n_over_2pi_Hz_per_T": 0.0,
        },
    }
}

NOISE_PRESETS: dict[str, dict[str, dict[str, float]]] = {
    "paper-tab5": {
        "sq": {"sigma_delta_omega_z_Hz": 20.0, "sigma_Omega_x_Hz": 0.25e6},
        "stq": {"sigma_delta_E_z_eV": 4e-9, "sigma_J_eV": 1e-9},
        "hq": {"sigma_J_eV": 1e-9},
        "dq": {"sigma_delta_omega_12_Hz": 100.0, "sigma_Omega_x_Hz": 25e3},
        "sdq": {"sigma_J_eV": 4e-9, "sigma_A_eV": 2.5e-9},
    }
}

# configuration field -> (channel, unit) per qubit type
_QUBIT_FIELDS: dict[QubitType, dict[str, tuple[str, str]]] = {
    QubitType.SQ: {
        "delta_omega_z_Hz": ("delta_omega_z", "Hz"),
        "Omega_x_Hz": ("Omega_x", "Hz"),
    },
    QubitType.STQ: {"J_eV": ("J", "eV"), "delta_E_z_eV": ("delta_E_z", "eV")},
    QubitType.HQ: {"Jmax_eV": ("Jmax", "eV")},
    QubitType.DQ: {
        "delta_omega_12_Hz": ("delta_omega_12", "Hz"),
        "Omega_x_Hz": ("Omega_x", "Hz"),
    },
    QubitType.SDQ: {"J_eV": ("J", "eV"), "A_eV": ("A", "eV")},
}

_NOISE_FIELDS: dict[QubitType, dict[str, tuple[str, ...]]] = {
    QubitType.SQ: {
        "sigma_delta_omega_z_Hz": ("delta_omega_z",),
        "sigma_Omega_x_Hz": ("Omega_x",),
    },
    QubitType.STQ: {"sigma_J_eV": ("J",), "sigma_delta_E_z_eV": ("delta_E_z",)},
    QubitType.HQ: {"sigma_J_eV": ("J1", "J2", "Jprime")},
    QubitType.DQ: {
        "sigma_delta_omega_12_Hz": ("delta_omega_12",),
        "sigma_Omega_x_Hz": ("Omega_x",),
    },
    QubitType.SDQ: {"sigma_J_eV": ("J",), "sigma_A_eV": ("A",)},
}


def qubit_config_fields(qubit_type: QubitType) -> tuple[str, ...]:
    return tuple(_QUBIT_FIELDS[qubit_type])


def noise_config_fields(qubit_type: QubitType) -> tuple[str, ...]:
    return tuple(_NOISE_FIELDS[qubit_type])


def _convert(value: float, unit: str) -> float:
    return hz_to_rad_per_s(value) if unit == "Hz" else ev_to_rad_per_s(value)


def qubit_spec_from_params(qubit_type: QubitType, params: Mapping[str, float]) -> QubitSpec:
    """Build a QubitSpec from configuration-unit parameters (Hz / eV / tesla)."""
    params = dict(params)
    b0 = params.pop("B0_tesla", None)
    if b0 is None:
        raise ConfigError(f"{qubit_type.value}: B0_tesla is required")
    g_e = params.pop("g_e", 2.0)
    gamma_n = params.pop("gamma_n_over_2pi_Hz_per_T", None)
    fields = _QUBIT_FIELDS[qubit_type]
    amplitudes: dict[str, float] = {}
    for name, value in params.items():
        if name not in fields:
            raise ConfigError(f"{qubit_type.value}: unknown parameter {name!r}")
        channel, unit = fields[name]
        amplitudes[channel] = _convert(value, unit)
    missing = set(fields) - {k for k in fields if fields[k][0] in amplitudes}
    if missing:
        raise ConfigError(f"{qubit_type.value}: missing parameters {sorted(missing)}")
    if qubit_type is QubitType.HQ:
        jmax = amplitudes.pop("Jmax")
        amplitudes.update({"J1": jmax, "J2": jmax, "Jprime": 0.5 * jmax})
    return QubitSpec(
        qubit_type=qubit_type,
        b0=float(b0),
        control_amplitudes=amplitudes,
        g_e=float(g_e),
        gamma_n_over_2pi=gamma_n,
    )


def noise_spec_from_params(
    qubit_type: QubitType, params: Mapping[str, float], sigma_t_s: float = 0.0
) -> NoiseSpec:
    """Build a NoiseSpec from configuration-unit sigmas (Hz / eV) plus a timing sigma."""
    fields = _NOISE_FIELDS[qubit_type]
    sigmas: dict[str, float] = {}
    for name, value in params.items():
        if name == "sigma_t_s":
            sigma_t_s = value
            continue
        if name not in fields:
            raise ConfigError(f"{qubit_type.value}: unknown noise parameter {name!r}")
        unit = "Hz" if name.endswith("_Hz") else "eV"
        for channel in fields[name]:
            sigmas[channel] = _convert(value, unit)
    return NoiseSpec(sigma_amplitude=sigmas, sigma_time=sigma_t_s)
