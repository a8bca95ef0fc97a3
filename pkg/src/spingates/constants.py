"""Physical constants (CODATA) and unit conversions.

Internal canonical unit for Hamiltonian coefficients and control
amplitudes is angular frequency (rad/s), i.e. H/hbar.  Energies (eV
family) and plain frequencies (Hz, read as omega/2pi) are converted at
the configuration boundary.
"""

import math

PLANCK_H = 6.62607015e-34  # J s, exact
HBAR = PLANCK_H / (2.0 * math.pi)  # J s
MU_BOHR = 9.2740100783e-24  # J/T
EV = 1.602176634e-19  # J, exact


def ev_to_rad_per_s(energy_ev: float) -> float:
    """Convert an energy in eV to an angular frequency E/hbar in rad/s."""
    return energy_ev * EV / HBAR


def rad_per_s_to_ev(omega: float) -> float:
    """Convert an angular frequency in rad/s to an energy hbar*omega in eV."""
    return omega * HBAR / EV


def hz_to_rad_per_s(frequency_hz: float) -> float:
    """Convert an ordinary frequency (omega/2pi) in Hz to rad/s."""
    return 2.0 * math.pi * frequency_hz


def rad_per_s_to_hz(omega: float) -> float:
    return omega / (2.0 * math.pi)


def joule_to_rad_per_s(energy_j: float) -> float:
    return energy_j / HBAR
