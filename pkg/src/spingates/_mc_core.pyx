# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Monte Carlo kernel: quasi-static noise propagation of 2x2 gates.

Twin of ``_mc_py.mc_infidelities``; expressions are kept structurally
identical so both backends agree to the last bit on the same inputs.
"""

from libc.math cimport cos, sin, sqrt

import numpy as np

BACKEND = "compiled"


def mc_infidelities(
    double[::1] durations,
    double[:, ::1] nominals,
    double[:, ::1] chan_map,
    double[::1] const_coeffs,
    double[:, ::1] amp_offsets,
    double[:, ::1] time_offsets,
):
    """Per-realization gate infidelities; see the Python twin for the contract."""
    cdef Py_ssize_t n_steps = durations.shape[0]
    cdef Py_ssize_t n_chan = chan_map.shape[0]
    cdef Py_ssize_t n_samples = amp_offsets.shape[0]
    cdef Py_ssize_t i

    out_arr = np.empty(n_samples, dtype=np.float64)
    cdef double[::1] out = out_arr

    zeros_c_arr = np.zeros(n_chan, dtype=np.float64)
    zeros_s_arr = np.zeros(n_steps, dtype=np.float64)
    cdef double[::1] zeros_c = zeros_c_arr
    cdef double[::1] zeros_s = zeros_s_arr

    cdef double complex i00, i01, i10, i11
    cdef double complex u00, u01, u10, u11
    cdef double complex tr
    cdef double f

    _propagate(durations, nominals, chan_map, const_coeffs, zeros_c, zeros_s,
               n_steps, n_chan, &i00, &i01, &i10, &i11)

    for i in range(n_samples):
        _propagate(durations, nominals, chan_map, const_coeffs,
                   amp_offsets[i], time_offsets[i],
                   n_steps, n_chan, &u00, &u01, &u10, &u11)
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
    return out_arr


cdef void _propagate(
    double[::1] durations,
    double[:, ::1] nominals,
    double[:, ::1] chan_map,
    double[::1] const_coeffs,
    double[::1] d_amp,
    double[::1] d_time,
    Py_ssize_t n_steps,
    Py_ssize_t n_chan,
    double complex *o00,
    double complex *o01,
    double complex *o10,
    double complex *o11,
) noexcept:
    cdef double complex u00 = 1.0, u01 = 0.0, u10 = 0.0, u11 = 1.0
    cdef double complex s00, s01, s11, ph, n00, n01, n10, n11
    cdef double a0, ax, az, v, t, r, cr, snc
    cdef Py_ssize_t s, c
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
        ph = cos(a0 * t) - 1j * sin(a0 * t)
        s00 = ph * (cr - 1j * (snc * az))
        s01 = ph * (0.0 - 1j * (snc * ax))
        s11 = ph * (cr + 1j * (snc * az))
        n00 = s00 * u00 + s01 * u10
        n01 = s00 * u01 + s01 * u11
        n10 = s01 * u00 + s11 * u10
        n11 = s01 * u01 + s11 * u11
        u00 = n00
        u01 = n01
        u10 = n10
        u11 = n11
    o00[0] = u00
    o01[0] = u01
    o10[0] = u10
    o11[0] = u11
