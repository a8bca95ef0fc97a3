"""Quasi-static Gaussian control noise and Monte Carlo infidelity estimation.

Noise model, per gate realization: one amplitude offset per control
channel (drawn once and applied to that channel's nominal value in
every step, including steps where the channel is nominally off) plus
one independent duration offset per step; disturbed durations clamp at
zero.  The per-realization figure of merit is one minus the
entanglement fidelity between the disturbed propagation and the ideal
one.

Estimates are deterministic for a fixed seed; sweep grid points derive
their seeds from (base_seed, point index) with a splitmix64 mix, so any
sub-grid rerun (at any concurrency) reproduces identical numbers.
"""

from __future__ import annotations

import math
import types
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from ._kernel import mc_infidelities
from .errors import ConfigError
from .qubits import QubitSpec, channel_order, coefficient_maps
from .sequences import PulseSequence, PulseStep, propagate, synthesize

__all__ = [
    "NoiseSpec",
    "FidelityEstimate",
    "SweepSpec",
    "TIME_DIMENSION",
    "disturb",
    "propagate",
    "estimate_infidelity",
    "sweep",
    "point_seed",
]

TIME_DIMENSION = "t"  # sweep-axis name for the step-timing sigma


@dataclass(frozen=True)
class NoiseSpec:
    """Standard deviations per control channel (rad/s) and for step timing (s)."""

    sigma_amplitude: Mapping[str, float] = field(default_factory=dict)
    sigma_time: float = 0.0

    def __post_init__(self):
        for name, sigma in self.sigma_amplitude.items():
            if not (sigma >= 0.0) or not math.isfinite(sigma):
                raise ConfigError(f"sigma for {name} must be >= 0, got {sigma!r}")
        if not (self.sigma_time >= 0.0) or not math.isfinite(self.sigma_time):
            raise ConfigError(f"sigma_time must be >= 0, got {self.sigma_time!r}")
        object.__setattr__(
            self, "sigma_amplitude", types.MappingProxyType(dict(self.sigma_amplitude))
        )

    def sigma_vector(self, spec: QubitSpec) -> np.ndarray:
        """Amplitude sigmas in canonical channel order; unknown channels are an error."""
        order = channel_order(spec.qubit_type)
        extra = set(self.sigma_amplitude) - set(order)
        if extra:
            raise ConfigError(
                f"noise channels unknown for {spec.qubit_type.value}: {sorted(extra)}"
            )
        return np.array([self.sigma_amplitude.get(name, 0.0) for name in order])

    def with_dimension(self, dimension: str, value: float) -> "NoiseSpec":
        """Copy with one sigma replaced; dimension is a channel name or ``TIME_DIMENSION``."""
        if dimension == TIME_DIMENSION:
            return NoiseSpec(sigma_amplitude=self.sigma_amplitude, sigma_time=value)
        amps = dict(self.sigma_amplitude)
        amps[dimension] = value
        return NoiseSpec(sigma_amplitude=amps, sigma_time=self.sigma_time)

    @property
    def is_zero(self) -> bool:
        return self.sigma_time == 0.0 and all(v == 0.0 for v in self.sigma_amplitude.values())


@dataclass(frozen=True)
class FidelityEstimate:
    """Monte Carlo mean gate infidelity with its standard error."""

    mean_infidelity: float
    std_error: float
    n_samples: int
    seed: int

    def __post_init__(self):
        if not (0.0 <= self.mean_infidelity <= 1.0):
            raise ValueError(f"mean infidelity out of range: {self.mean_infidelity!r}")
        if self.std_error < 0.0:
            raise ValueError(f"negative standard error: {self.std_error!r}")
        if self.n_samples < 1:
            raise ValueError(f"n_samples must be >= 1, got {self.n_samples!r}")


def disturb(seq: PulseSequence, noise: NoiseSpec, rng: np.random.Generator) -> PulseSequence:
    """One noisy realization of a sequence.

    Draw order (fixes the RNG stream): first one standard normal per
    channel in canonical order, then one per step in temporal order.
    """
    order = channel_order(seq.qubit.qubit_type)
    sigma_amp = noise.sigma_vector(seq.qubit)
    d_amp = rng.standard_normal(len(order)) * sigma_amp
    d_time = rng.standard_normal(len(seq.steps)) * noise.sigma_time
    offsets = dict(zip(order, d_amp))
    steps = tuple(
        PulseStep(
            controls={name: step.controls[name] + offsets[name] for name in order},
            duration=max(0.0, step.duration + d_time[i]),
            label=step.label,
        )
        for i, step in enumerate(seq.steps)
    )
    return PulseSequence(
        steps=steps,
        qubit=seq.qubit,
        target_axis=seq.target_axis,
        target_angle=seq.target_angle,
        provenance={**seq.provenance, "disturbed": True},
    )


def _sequence_arrays(seq: PulseSequence):
    order = channel_order(seq.qubit.qubit_type)
    durations = np.array([step.duration for step in seq.steps])
    nominals = np.array([[step.controls[name] for name in order] for step in seq.steps])
    if nominals.size == 0:
        nominals = nominals.reshape(len(seq.steps), len(order))
    const, chan = coefficient_maps(seq.qubit)
    return durations, nominals, chan, const


def estimate_infidelity(
    seq: PulseSequence, noise: NoiseSpec, n_samples: int, seed: int
) -> FidelityEstimate:
    """Mean of 1 - F(U_ideal, U_disturbed) over independent noise realizations.

    With an all-zero ``noise`` every realization equals the ideal
    propagation by construction, so the estimate is exactly zero.
    """
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1, got {n_samples!r}")
    if noise.is_zero:
        return FidelityEstimate(0.0, 0.0, n_samples, seed)
    sigma_amp = noise.sigma_vector(seq.qubit)
    durations, nominals, chan, const = _sequence_arrays(seq)
    rng = np.random.default_rng(seed)
    amp_offsets = rng.standard_normal((n_samples, len(sigma_amp))) * sigma_amp
    time_offsets = rng.standard_normal((n_samples, len(seq.steps))) * noise.sigma_time
    infids = np.asarray(
        mc_infidelities(durations, nominals, chan, const, amp_offsets, time_offsets)
    )
    mean = float(infids.mean())
    sem = float(infids.std(ddof=1) / math.sqrt(n_samples)) if n_samples > 1 else 0.0
    return FidelityEstimate(mean, sem, n_samples, seed)


@dataclass(frozen=True)
class SweepSpec:
    """Grid of noise sigmas to scan for one qubit/gate.

    ``axes`` is an ordered list of (dimension, values); the grid is
    their Cartesian product in row-major order (first axis slowest).
    Dimensions are channel names or ``TIME_DIMENSION``; values are in
    the channel's internal unit (rad/s) or seconds for timing.
    """

    qubit: QubitSpec
    axis: str
    angle: float
    axes: tuple[tuple[str, tuple[float, ...]], ...]
    base_noise: NoiseSpec = NoiseSpec()
    n_samples: int = 2000
    base_seed: int = 0

    def __post_init__(self):
        if not self.axes:
            raise ConfigError("sweep needs at least one axis")
        for name, values in self.axes:
            if len(values) == 0:
                raise ConfigError(f"sweep axis {name!r} has no values")
            for v in values:
                if not (v >= 0.0):
                    raise ConfigError(f"sweep axis {name!r} has negative value {v!r}")
        object.__setattr__(
            self, "axes", tuple((name, tuple(values)) for name, values in self.axes)
        )

    def grid(self) -> list[dict[str, float]]:
        names = [name for name, _ in self.axes]
        return [
            dict(zip(names, point)) for point in product(*(values for _, values in self.axes))
        ]


def point_seed(base_seed: int, index: int) -> int:
    """splitmix64 mix of (base_seed, index) -> independent 64-bit stream seed."""
    mask = (1 << 64) - 1
    z = (base_seed + (index + 1) * 0x9E3779B97F4A7C15) & mask
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
    return z ^ (z >> 31)


def _evaluate_point(args) -> FidelityEstimate:
    seq, noise, n_samples, seed = args
    return estimate_infidelity(seq, noise, n_samples, seed)


def sweep(
    spec: SweepSpec, jobs: int = 1, physical: bool = False
) -> list[tuple[dict[str, float], FidelityEstimate]]:
    """One estimate per grid point, ordered by grid index.

    Points are independent; with ``jobs > 1`` they are evaluated in a
    process pool.  Results are identical for any ``jobs`` value.
    """
    seq = synthesize(spec.qubit, spec.axis, spec.angle, physical=physical)
    points = spec.grid()
    tasks = []
    for index, point in enumerate(points):
        noise = spec.base_noise
        for dimension, value in point.items():
            noise = noise.with_dimension(dimension, value)
        tasks.append((seq, noise, spec.n_samples, point_seed(spec.base_seed, index)))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            estimates = list(pool.map(_evaluate_point, tasks))
    else:
        estimates = [_evaluate_point(task) for task in tasks]
    return list(zip(points, estimates))
