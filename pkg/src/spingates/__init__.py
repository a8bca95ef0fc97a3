"""Analytic pulse synthesis and Monte Carlo gate-fidelity estimation for spin qubits.

Five qubit types (single-dot spin, singlet-triplet, hybrid, donor,
spin-donor) share a 2x2 effective model; this package compiles Rz/Rx
rotations into closed-form pulse sequences, perturbs them with
quasi-static Gaussian amplitude and timing errors, and estimates the
entanglement-fidelity loss by Monte Carlo.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .errors import (
    ConfigError,
    HighFieldApproximationWarning,
    MinimumStepTimeWarning,
    SpinGatesError,
    SynthesisError,
    VerificationError,
)
from .noise import (
    FidelityEstimate,
    NoiseSpec,
    SweepSpec,
    TIME_DIMENSION,
    disturb,
    estimate_infidelity,
    point_seed,
    sweep,
)
from .presets import (
    NOISE_PRESETS,
    QUBIT_PRESETS,
    noise_spec_from_params,
    qubit_spec_from_params,
)
from .qubits import (
    QubitSpec,
    QubitType,
    build_coeffs,
    channel_order,
    coefficient_maps,
    donor_transition_frequencies,
    exchange_from_hubbard,
    zeeman_energy,
)
from .sequences import (
    MIN_STEP_TIME,
    VERIFY_FIDELITY_MIN,
    PulseSequence,
    PulseStep,
    format_sequence_table,
    propagate,
    synth_dq,
    synth_hq,
    synth_sdq,
    synth_sq,
    synth_stq,
    synthesize,
    verify_sequence,
)
from .su2 import (
    HamiltonianCoeffs,
    entanglement_fidelity,
    expm_su2,
    rotation_x,
    rotation_z,
)

__version__ = "0.1.0"
