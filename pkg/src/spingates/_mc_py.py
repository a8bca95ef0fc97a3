"""Pure-Python Monte Carlo kernel (fallback for the compiled extension).

Mirrors ``_mc_core.pyx`` operation for operation so both backends
produce identical floating-point results on the same inputs.
"""

from math import cos, sin, sqrt

import numpy as np

BACKEND = "python"


def mc_infidelities(durations, nominals, chan_map, const_coeffs, amp_offsets, time_offsets):
    """Per-realization gate infidelities under quasi-static control noise.

    Parameters
    ----------
    durations : (S,) float64
        Nominal step durations in seconds, temporal order.
    nominals : (S, C) float64
        Nominal channel values per step, rad/s, canonical channel order.
    chan_map : (C, 3) float64
        Per-unit-value channel contribution to (alpha0, alphax, alphaz).
    const_coeffs : (3,) float64
        Constant (alpha0, alphax, alphaz) offset.
    amp_offsets : (N, C) float64
        Quasi-static per-channel amplitude offsets, one row per realization.
    time_offsets : (N, S) float64
        Per-step duration offsets; disturbed durations clamp at zero.

    Returns
    -------
    (N,) float64 array of ``1 - F`` against the ideal (zero-offset) propagation.
    """
    durations = np.ascontiguousarray(durations, dtype=np.float64)
    nominals = np.ascontiguousarray(nominals, dtype=np.float64)
    chan_map = np.ascontiguousarray(chan_map, dtype=np.float64)
    const_coeffs = np.ascontiguousarray(const_coeffs, dtype=np.float64)
    amp_offsets = np.ascontiguousarray(amp_offsets, dtype=np.float64)
    time_offsets = np.ascontiguousarray(time_offsets, dtype=np.float64)

    n_steps = durations.shape[0]
    n_chan = chan_map.shape[0]
    n_samples = amp_offsets.shape[0]

    zeros_c = np.zeros(n_chan)
    zeros_s = np.zeros(n_steps)
    i00, i01, i10, i11 = _propagate(
        durations, nominals, chan_map, const_coeffs, zeros_c, zeros_s, n_steps, n_chan
    )

    out = np.empty(n_samples)
    for i in range(n_samples):
        u00, u01, u10, u11 = _propagate(
            durations, nominals, chan_map, const_coeffs,
            amp_offsets[i], time_offsets[i], n_steps, n_chan,
        )
        tr = (
            i00.conjugate() * u00
            + i01.conjugate() * u01
            + i10.conjugate() * u10
            + i11.conjugate() * u11
        )
        f = 0.25 * (tr.real * tr.real + tr.imag * tr.imag)
        if f > 1.0:
            f = 1.0
        elif f < 0.0:
            f = 0.0
        out[i] = 1.0 - f
    return out


def _propagate(durations, nominals, chan_map, const_coeffs, d_amp, d_time, n_steps, n_chan):
    u00 = 1.0 + 0.0j
    u01 = 0.0 + 0.0j
    u10 = 0.0 + 0.0j
    u11 = 1.0 + 0.0j
    for s in range(n_steps):
        a0 = const_coeffs[0]
        ax = const_coeffs[1]
        az = const_coeffs[2]
        for c in range(n_chan):
            v = nominals[s, c] + d_amp[c]
            a0 += v * chan_map[c, 0]
            ax += v * chan_map[c, 1]
            az += v * chan_map[c, 2]
        t = durations[s] + d_time[s]
        if t < 0.0:
            t = 0.0
        r = sqrt(ax * ax + az * az)
        cr = cos(r * t)
        snc = sin(r * t) / r if r > 0.0 else t
        ph = complex(cos(a0 * t), -sin(a0 * t))
        s00 = ph * complex(cr, -snc * az)
        s01 = ph * complex(0.0, -snc * ax)
        s11 = ph * complex(cr, snc * az)
        # left-multiply the accumulated propagator by this step
        n00 = s00 * u00 + s01 * u10
        n01 = s00 * u01 + s01 * u11
        n10 = s01 * u00 + s11 * u10
        n11 = s01 * u01 + s11 * u11
        u00, u01, u10, u11 = n00, n01, n10, n11
    return u00, u01, u10, u11
