"""Seeded phase processes and canonical angle arithmetic.

Everything downstream consumes randomness through :class:`PhaseStream`,
which yields trial-indexed samples of a stationary random phase on
``[0, 2*pi)``.  Two models are provided:

* ``iid``: one independent uniform draw per trial, produced by a
  counter-based hash of the trial index, so the phase of any trial can be
  computed directly without generating its predecessors.
* ``oscillator``: the wrapped sum of an ensemble of fixed random angular
  rates, a deterministic rotation sequence that equidistributes on
  ``[0, 2*pi)`` after an optional burn-in.

Because a phase is a pure function of ``(model, trial index)``, streams are
reproducible bit-for-bit across runs and platforms, and leapfrog substreams
partition the serial sequence exactly.  That is what makes worker-count
independence an identity rather than an approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

TWO_PI = 2.0 * math.pi

IID_UNIFORM = "iid"
OSCILLATOR_ENSEMBLE = "oscillator"
_KINDS = (IID_UNIFORM, OSCILLATOR_ENSEMBLE)

_MAX_SEED = 2**64 - 1

# splitmix64: golden-gamma counter increment + Stafford mix13 finalizer.
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
# xor tag keeping the oscillator frequency draw off the phase counter space
_FREQ_TAG = 0xB5AD4ECEDA1CE2A9
_INV_2POW53 = 1.0 / 9007199254740992.0


def wrap_angle(x: float) -> float:
    """Reduce an angle in radians to the canonical interval ``(-pi, pi]``.

    Values already in range are returned unchanged, which makes wrapping
    exactly idempotent.  Raises ``ValueError`` for non-finite input.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"angle must be finite, got {x!r}")
    if -math.pi < x <= math.pi:
        return x
    r = x % TWO_PI
    if r > math.pi:
        # also catches the float edge case where the modulo lands on 2*pi
        r -= TWO_PI
    return r


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def _uniform01(seed: int, counters: np.ndarray) -> np.ndarray:
    """Uniform doubles in [0, 1) addressed by counter index."""
    z = np.uint64(seed) + (counters.astype(np.uint64) + np.uint64(1)) * _GAMMA
    return (_mix64(z) >> np.uint64(11)).astype(np.float64) * _INV_2POW53


def _uniform01_open(seed: int, counters: np.ndarray) -> np.ndarray:
    """Uniform doubles in (0, 1] addressed by counter index."""
    z = np.uint64(seed) + (counters.astype(np.uint64) + np.uint64(1)) * _GAMMA
    u = (_mix64(z) >> np.uint64(11)) + np.uint64(1)
    return u.astype(np.float64) * _INV_2POW53


@dataclass(frozen=True)
class PhaseModel:
    """Configuration of a reproducible phase process.

    ``ensemble_size``, ``frequency_spread`` and ``burn_in`` apply to the
    ``oscillator`` kind only and sit at their defaults otherwise.
    """

    kind: str = IID_UNIFORM
    seed: int = 0
    ensemble_size: int = 32
    frequency_spread: float = 1.0
    burn_in: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown phase model kind {self.kind!r}; expected one of {_KINDS}")
        if not (0 <= int(self.seed) <= _MAX_SEED):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if int(self.ensemble_size) < 1:
            raise ValueError("ensemble_size must be >= 1")
        spread = float(self.frequency_spread)
        if not (math.isfinite(spread) and spread > 0.0):
            raise ValueError("frequency_spread must be a positive finite number")
        if int(self.burn_in) < 0:
            raise ValueError("burn_in must be >= 0")


class PhaseSample(NamedTuple):
    t: int
    phi: float


def ensemble_frequencies(model: PhaseModel) -> np.ndarray:
    """Per-oscillator angular rates, i.i.d. uniform on ``(0, frequency_spread]``.

    Drawn once from the seed; the rates, not the phases, carry the model's
    randomness.
    """
    if model.kind != OSCILLATOR_ENSEMBLE:
        raise ValueError("ensemble_frequencies only applies to the oscillator model")
    u = _uniform01_open(model.seed ^ _FREQ_TAG, np.arange(model.ensemble_size, dtype=np.int64))
    return model.frequency_spread * u


def _total_rate(model: PhaseModel) -> float:
    # fsum keeps the reduction order-independent and platform-stable
    return math.fsum(ensemble_frequencies(model).tolist())


def phases_at(model: PhaseModel, trials: np.ndarray) -> np.ndarray:
    """Phase values for the given trial indices, each in ``[0, 2*pi)``."""
    t = np.asarray(trials, dtype=np.int64)
    if t.size and int(t.min()) < 0:
        raise ValueError("trial indices must be nonnegative")
    if model.kind == IID_UNIFORM:
        return _uniform01(model.seed, t) * TWO_PI
    rate = _total_rate(model)
    return np.mod(rate * (t + model.burn_in).astype(np.float64), TWO_PI)


class PhaseStream:
    """A position-tracking view over the phase sequence of one model.

    The underlying sequence is addressed by trial index; a stream holds an
    immutable ``(start, stride)`` window plus a cursor.  Drawing advances
    only the cursor, so equal configurations replay identical samples.  A
    stream instance must not be advanced from two threads at once; parallel
    work splits the sequence with :func:`substream` instead.
    """

    def __init__(self, model: PhaseModel, start: int = 0, stride: int = 1):
        if start < 0:
            raise ValueError("start must be >= 0")
        if stride < 1:
            raise ValueError("stride must be >= 1")
        self.model = model
        self.start = int(start)
        self.stride = int(stride)
        self._cursor = 0

    @property
    def position(self) -> int:
        """Number of samples drawn (or skipped) so far."""
        return self._cursor

    def take(self, count: int) -> tuple[np.ndarray, np.ndarray]:
        """Draw the next ``count`` samples as ``(trial_indices, phases)`` arrays."""
        if count < 0:
            raise ValueError("count must be >= 0")
        t = self.start + self.stride * (self._cursor + np.arange(count, dtype=np.int64))
        phi = phases_at(self.model, t)
        self._cursor += count
        return t, phi

    def next_sample(self) -> PhaseSample:
        t, phi = self.take(1)
        return PhaseSample(int(t[0]), float(phi[0]))

    def skip(self, count: int) -> None:
        """Advance the cursor without materializing samples."""
        if count < 0:
            raise ValueError("count must be >= 0")
        self._cursor += count

    def __repr__(self) -> str:
        return (
            f"PhaseStream({self.model!r}, start={self.start}, "
            f"stride={self.stride}, position={self._cursor})"
        )


def make_phase_stream(model: PhaseModel) -> PhaseStream:
    """Serial stream over trials ``0, 1, 2, ...`` of the model's sequence."""
    return PhaseStream(model)


def substream(stream: PhaseStream, chunk_index: int, num_chunks: int) -> PhaseStream:
    """Leapfrog split of everything the stream has not yet drawn.

    Chunk ``c`` of ``C`` sees trial indices ``c, c + C, c + 2C, ...`` counted
    from the parent's cursor; together the chunks cover the parent sequence
    exactly once, as a multiset of ``(t, phi)`` pairs.  The parent stream is
    left untouched.
    """
    if num_chunks < 1:
        raise ValueError("num_chunks must be >= 1")
    if not 0 <= chunk_index < num_chunks:
        raise ValueError(f"chunk_index {chunk_index} outside 0..{num_chunks - 1}")
    return PhaseStream(
        stream.model,
        start=stream.start + stream.stride * (stream.position + chunk_index),
        stride=stream.stride * num_chunks,
    )


def chunk_quota(total: int, chunk_index: int, num_chunks: int) -> int:
    """How many of ``total`` leapfrog draws land in the given chunk."""
    if total < 0:
        raise ValueError("total must be >= 0")
    if num_chunks < 1:
        raise ValueError("num_chunks must be >= 1")
    if not 0 <= chunk_index < num_chunks:
        raise ValueError(f"chunk_index {chunk_index} outside 0..{num_chunks - 1}")
    return max(0, (total - chunk_index + num_chunks - 1) // num_chunks)
