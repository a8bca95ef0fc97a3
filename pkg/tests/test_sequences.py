import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spingates import (
    MinimumStepTimeWarning,
    PulseSequence,
    PulseStep,
    QubitType,
    SynthesisError,
    entanglement_fidelity,
    format_sequence_table,
    propagate,
    rotation_z,
    synthesize,
    verify_sequence,
)
from spingates.constants import EV, PLANCK_H

NS = 1e-9

# reference step times [ns] for Rx(pi/2) / Rz(pi/2) at the paper-2018
# amplitudes, from the closed-form expressions (tolerance 0.5%)
REFERENCE_TIMES_NS = {
    QubitType.SQ: {"x": [50.0], "z": [12.5]},
    QubitType.STQ: {"x": [16.15], "z": [64.62, 4.43]},
    QubitType.DQ: {"x": [500.0], "z": [125.0]},
    QubitType.SDQ: {"x": [20.68], "z": [82.71, 124.07]},
}
REFERENCE_TOTALS_NS = {
    QubitType.SQ: {"x": 50.0, "z": 12.5},
    QubitType.STQ: {"x": 16.15, "z": 69.05},
    QubitType.DQ: {"x": 500.0, "z": 125.0},
    QubitType.SDQ: {"x": 20.68, "z": 206.78},
}


@pytest.mark.parametrize("qubit_type", [QubitType.SQ, QubitType.STQ, QubitType.DQ, QubitType.SDQ])
@pytest.mark.parametrize("axis", ["x", "z"])
def test_reference_step_times(preset_specs, pi_half, qubit_type, axis):
    seq = synthesize(preset_specs[qubit_type], axis, pi_half)
    expected = REFERENCE_TIMES_NS[qubit_type][axis]
    assert len(seq.steps) == len(expected)
    for step, ref in zip(seq.steps, expected):
        assert step.duration / NS == pytest.approx(ref, rel=5e-3)
    assert seq.total_time / NS == pytest.approx(REFERENCE_TOTALS_NS[qubit_type][axis], rel=5e-3)


def test_stq_step_order(preset_specs, pi_half):
    seq = synthesize(preset_specs[QubitType.STQ], "z", pi_half)
    assert seq.steps[0].label == "delta_E_z on"
    assert seq.steps[1].label == "J on"
    assert seq.steps[0].controls["J"] == 0.0
    assert seq.steps[1].controls["delta_E_z"] == 0.0


def test_hq_wait_step_time(preset_specs, pi_half):
    seq = synthesize(preset_specs[QubitType.HQ], "z", pi_half)
    wait = [s for s in seq.steps if s.label == "wait"]
    assert len(wait) == 1
    # (2 - theta/pi) h / Jmax = 1.5 * 4.1357 ns
    assert wait[0].duration / NS == pytest.approx(6.20, rel=5e-3)
    # Jprime never switches off
    assert all(s.controls["Jprime"] > 0 for s in seq.steps)


def test_hq_resolution_recorded(preset_specs, pi_half):
    for axis in ("x", "z"):
        seq = synthesize(preset_specs[QubitType.HQ], axis, pi_half)
        fid, ok = verify_sequence(seq)
        assert ok
        assert "order" in seq.provenance
        assert seq.provenance["fidelity"] >= 1 - 1e-9


def test_hq_rx_first_pulse_time(preset_specs, pi_half):
    seq = synthesize(preset_specs[QubitType.HQ], "x", pi_half)
    assert len(seq.steps) == 2
    times = sorted(step.duration / NS for step in seq.steps)
    assert times[0] == pytest.approx(0.38, rel=2e-2)


def test_hq_rx_cycle_count_is_minimal_ceiling(preset_specs):
    spec = preset_specs[QubitType.HQ]
    jmax = spec.amplitude("J1")
    ez = spec.g_e * 9.2740100783e-24 * spec.b0 / (PLANCK_H / (2 * math.pi))
    coeff_c = ez + 0.75 * jmax
    for phi in (0.3, math.pi / 2, 2.0, 5.0):
        seq = synthesize(spec, "x", phi)
        expected_n = math.ceil((coeff_c / jmax) * (phi / (2 * math.pi)) / math.sqrt(3.0))
        assert seq.provenance["n"] == expected_n


def test_zero_angle_single_step_qubits(preset_specs):
    for qt in (QubitType.SQ, QubitType.DQ):
        for axis in ("x", "z"):
            seq = synthesize(preset_specs[qt], axis, 0.0)
            assert seq.total_time == 0.0
            fid, ok = verify_sequence(seq)
            assert ok


def test_stq_exchange_time_vanishes_near_full_turn(preset_specs):
    seq = synthesize(preset_specs[QubitType.STQ], "z", 2 * math.pi - 1e-6)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MinimumStepTimeWarning)
        pass
    assert seq.steps[1].duration < 1e-12
    assert verify_sequence(seq)[1]


def test_sdq_total_time_decreases_with_angle(preset_specs):
    totals = [
        synthesize(preset_specs[QubitType.SDQ], "z", theta).total_time
        for theta in (0.5, 1.5, 2.5, 4.0, 6.0)
    ]
    assert all(a > b for a, b in zip(totals, totals[1:]))


def test_stq_minimality_of_gradient_step(preset_specs, pi_half):
    seq = synthesize(preset_specs[QubitType.STQ], "x", pi_half)
    de_ev = 32e-9
    next_branch = (pi_half / (4 * math.pi) + 1) * PLANCK_H / (de_ev * EV)
    assert seq.steps[0].duration < next_branch


@pytest.mark.parametrize("qubit_type", list(QubitType))
@pytest.mark.parametrize("axis", ["x", "z"])
def test_synthesis_verifies_on_uniform_angles(preset_specs, qubit_type, axis):
    rng = np.random.default_rng(31)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MinimumStepTimeWarning)
        for angle in rng.uniform(0.0, 2 * math.pi, size=25):
            seq = synthesize(preset_specs[qubit_type], axis, angle)
            fid, ok = verify_sequence(seq)
            assert ok, f"{qubit_type} R{axis}({angle}) fidelity {fid}"


@pytest.mark.parametrize("qubit_type", list(QubitType))
@given(angle=st.floats(-20.0, 20.0))
@settings(max_examples=40, deadline=None)
def test_synthesized_durations_non_negative(preset_specs, qubit_type, angle):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MinimumStepTimeWarning)
        seq = synthesize(preset_specs[qubit_type], "z", angle)
    assert all(step.duration >= 0.0 for step in seq.steps)


def test_angle_normalization(preset_specs, pi_half):
    a = synthesize(preset_specs[QubitType.SQ], "z", pi_half)
    b = synthesize(preset_specs[QubitType.SQ], "z", pi_half + 2 * math.pi)
    c = synthesize(preset_specs[QubitType.SQ], "z", pi_half - 2 * math.pi)
    assert b.target_angle == pytest.approx(a.target_angle, abs=1e-12)
    assert c.target_angle == pytest.approx(a.target_angle, abs=1e-12)


def test_angle_additivity_at_unitary_level(preset_specs):
    for qt in QubitType:
        th1, th2 = 0.7, 1.9
        u1 = propagate(synthesize(preset_specs[qt], "z", th1))
        u2 = propagate(synthesize(preset_specs[qt], "z", th2))
        fid = entanglement_fidelity(rotation_z(th1 + th2), u2 @ u1)
        assert fid >= 1 - 1e-9


def test_short_step_warning(preset_specs):
    with pytest.warns(MinimumStepTimeWarning):
        synthesize(preset_specs[QubitType.SQ], "z", 0.001)


def test_tampered_sequence_fails_verification(preset_specs, pi_half):
    seq = synthesize(preset_specs[QubitType.SQ], "z", pi_half)
    doubled = PulseSequence(
        steps=(
            PulseStep(
                controls=dict(seq.steps[0].controls),
                duration=2 * seq.steps[0].duration,
                label=seq.steps[0].label,
            ),
        ),
        qubit=seq.qubit,
        target_axis="z",
        target_angle=pi_half,
    )
    fid, ok = verify_sequence(doubled)
    assert not ok


def test_physical_flag_exposes_approximation_error(preset_specs, pi_half):
    for qt in (QubitType.STQ, QubitType.SDQ):
        seq = synthesize(preset_specs[qt], "z", pi_half, physical=True)
        fid, ok = verify_sequence(seq)
        assert not ok
        assert 0.9 < fid < 1.0 - 1e-9


def test_zero_amplitude_rejected(preset_specs):
    with pytest.raises(Exception):
        synthesize(preset_specs[QubitType.SQ], "y", 1.0)
    with pytest.raises(SynthesisError):
        synthesize(preset_specs[QubitType.SQ], "z", math.nan)


def test_empty_sequence_propagates_to_identity(preset_specs):
    seq = PulseSequence(steps=(), qubit=preset_specs[QubitType.SQ], target_axis="z", target_angle=0.0)
    assert np.allclose(propagate(seq), np.eye(2), atol=1e-15)


def test_sequence_table_format(preset_specs, pi_half):
    table = format_sequence_table(synthesize(preset_specs[QubitType.STQ], "z", pi_half))
    assert "delta_E_z" in table and "32 neV" in table
    assert "J on" in table and "700 neV" in table
    assert "total" in table
    hq_table = format_sequence_table(synthesize(preset_specs[QubitType.HQ], "z", pi_half))
    assert "wait" in hq_table and "1 ueV" in hq_table
