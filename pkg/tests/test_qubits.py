import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spingates import (
    ConfigError,
    HighFieldApproximationWarning,
    QubitSpec,
    QubitType,
    build_coeffs,
    channel_order,
    coefficient_maps,
    donor_transition_frequencies,
    exchange_from_hubbard,
    zeeman_energy,
)
from spingates.constants import EV, HBAR, ev_to_rad_per_s, rad_per_s_to_ev

import oracles


def test_zeeman_energy_values():
    assert zeeman_energy(2.0, 0.0) == 0.0
    # g_e * mu_B * B0 with CODATA mu_B
    assert zeeman_energy(2.0, 0.03) == pytest.approx(5.56440604698e-25, rel=1e-12)
    assert zeeman_energy(2.0, 0.03) / EV == pytest.approx(3.47302908362e-06, rel=1e-11)
    assert zeeman_energy(2.0, 1.2) / EV == pytest.approx(1.38921163345e-04, rel=1e-11)


def test_zeeman_rejects_negative_field():
    with pytest.raises(ValueError):
        zeeman_energy(2.0, -0.1)


def test_sq_coefficients(preset_specs):
    spec = preset_specs[QubitType.SQ]
    coeffs = build_coeffs(spec, {"delta_omega_z": 2 * math.pi * 20e6, "Omega_x": 0.0})
    assert coeffs.alphaz == pytest.approx(math.pi * 20e6, rel=1e-12)
    assert coeffs.alphax == 0.0
    assert coeffs.alpha0 == 0.0


def test_stq_coefficients(preset_specs):
    spec = preset_specs[QubitType.STQ]
    de = ev_to_rad_per_s(32e-9)
    coeffs = build_coeffs(spec, {"J": 0.0, "delta_E_z": de})
    assert coeffs.alphaz == 0.0
    assert coeffs.alpha0 == 0.0
    assert coeffs.alphax == pytest.approx(32e-9 * EV / HBAR, rel=1e-12)


def test_stq_alphaz_to_alpha0_ratio(preset_specs):
    spec = preset_specs[QubitType.STQ]
    for j_ev in (1e-9, 50e-9, 700e-9):
        coeffs = build_coeffs(spec, {"J": ev_to_rad_per_s(j_ev), "delta_E_z": 0.0})
        assert coeffs.alphaz / coeffs.alpha0 == pytest.approx(2.0, rel=1e-12)


def test_hq_symmetric_pulses_cancel_x(preset_specs):
    spec = preset_specs[QubitType.HQ]
    jmax = spec.amplitude("J1")
    coeffs = build_coeffs(spec, {"J1": jmax, "J2": jmax, "Jprime": 0.5 * jmax})
    assert coeffs.alphax == 0.0


def test_sq_dq_have_no_identity_term(preset_specs):
    rng = np.random.default_rng(3)
    for qt in (QubitType.SQ, QubitType.DQ):
        spec = preset_specs[qt]
        for _ in range(20):
            controls = {name: rng.uniform(-1e9, 1e9) for name in channel_order(qt)}
            assert build_coeffs(spec, controls).alpha0 == 0.0


def test_build_coeffs_matches_affine_maps(preset_specs):
    rng = np.random.default_rng(11)
    for qt, spec in preset_specs.items():
        const, chan = coefficient_maps(spec)
        for _ in range(10):
            values = rng.uniform(-1e9, 1e9, size=len(channel_order(qt)))
            controls = dict(zip(channel_order(qt), values))
            coeffs = build_coeffs(spec, controls)
            expected = const + values @ chan
            assert np.allclose(
                [coeffs.alpha0, coeffs.alphax, coeffs.alphaz], expected, rtol=1e-12
            )


def test_build_coeffs_rejects_bad_channels(preset_specs):
    spec = preset_specs[QubitType.STQ]
    with pytest.raises(ConfigError):
        build_coeffs(spec, {"J": 0.0})
    with pytest.raises(ConfigError):
        build_coeffs(spec, {"J": 0.0, "delta_E_z": 0.0, "Omega_x": 1.0})


def test_qubit_spec_validation():
    with pytest.raises(ConfigError):
        QubitSpec(QubitType.SQ, b0=1.0, control_amplitudes={"delta_omega_z": 1e8})
    with pytest.raises(ConfigError):
        QubitSpec(
            QubitType.SQ,
            b0=1.0,
            control_amplitudes={"delta_omega_z": 1e8, "Omega_x": 0.0},
        )
    with pytest.raises(ConfigError):
        QubitSpec(
            QubitType.SDQ,
            b0=0.3,
            control_amplitudes={"J": 1e6, "A": 1e6},
            gamma_n_over_2pi=None,
        )


@given(energy_nev=st.floats(1e-3, 1e6))
@settings(max_examples=200)
def test_energy_unit_round_trip(energy_nev):
    ev = energy_nev * 1e-9
    assert rad_per_s_to_ev(ev_to_rad_per_s(ev)) == pytest.approx(ev, rel=1e-12)


def test_donor_frequencies_collapse_without_hyperfine():
    gamma_e = 2 * math.pi * 28e9
    w12, w34 = donor_transition_frequencies(gamma_e, 2 * math.pi * 17e6, 1.0, 0.0)
    assert w12 == pytest.approx(gamma_e, rel=1e-12)
    assert w34 == pytest.approx(gamma_e, rel=1e-12)


# hyperfine range restricted to the physical group-V regime: for
# gamma_e*B0/A beyond ~4e3 the last-ulp rounding of the absolute
# frequencies alone exceeds 1e-12 of A, so the identity is untestable
@pytest.mark.filterwarnings("ignore::spingates.HighFieldApproximationWarning")
@given(
    b0=st.floats(0.05, 3.0),
    a_mhz=st.floats(30.0, 2000.0),
    gamma_n_mhz_t=st.floats(1.0, 50.0),
)
@settings(max_examples=200)
def test_donor_frequency_splitting_identity(b0, a_mhz, gamma_n_mhz_t):
    gamma_e = 2 * math.pi * 28e9
    gamma_n = 2 * math.pi * gamma_n_mhz_t * 1e6
    a = 2 * math.pi * a_mhz * 1e6
    w12, w34 = donor_transition_frequencies(gamma_e, gamma_n, b0, a)
    assert (w34 - w12) == pytest.approx(a, rel=1e-12)


def test_donor_frequencies_against_four_level_oracle():
    rng = np.random.default_rng(17)
    for _ in range(50):
        b0 = rng.uniform(0.2, 3.0)
        gamma_e = 2 * math.pi * 28e9
        gamma_n = 2 * math.pi * rng.uniform(5e6, 50e6)
        a = 2 * math.pi * rng.uniform(1e6, 500e6)
        got = donor_transition_frequencies(gamma_e, gamma_n, b0, a)
        ref = oracles.donor_levels(gamma_e, gamma_n, b0, a)
        assert got[0] == pytest.approx(ref[0], rel=1e-9)
        assert got[1] == pytest.approx(ref[1], rel=1e-9)


def test_donor_frequencies_warn_outside_high_field():
    with pytest.warns(HighFieldApproximationWarning):
        donor_transition_frequencies(2 * math.pi * 28e9, 0.0, 1e-3, 2 * math.pi * 100e6)


def test_donor_frequencies_reject_negative_field():
    with pytest.raises(ValueError):
        donor_transition_frequencies(1.0, 0.0, -1.0, 0.0)


def test_hubbard_exchange_values():
    assert exchange_from_hubbard(5.0, 5.0, 100.0, 10.0, 3.0, 2.5) == pytest.approx(-5.0)
    # 4 * (10 ueV)^2 / 4 meV = 0.1 ueV, direct exchange off
    j = exchange_from_hubbard(10e-6, 0.0, 4e-3, 0.0, 0.0, 0.0)
    assert j == pytest.approx(0.1e-6, rel=1e-12)


def test_hubbard_rejects_bad_denominator():
    with pytest.raises(ValueError):
        exchange_from_hubbard(1.0, 0.0, 1.0, 1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        exchange_from_hubbard(1.0, 0.0, 5.0, 1.0, 4.5, 0.0)
