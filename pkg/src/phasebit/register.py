"""Virtual registers: N two-valued signal qubits sharing one phase stream.

A qubit is either ``Definite(bit)`` or ``Balanced(alpha)``.  A measurement
trial draws a single shared phase; every Balanced qubit reads its dichotomic
signal at its own detector angle, so all correlation between qubits comes
from the shared phase (the register is the coherence zone).  One designated
signal qubit gates trial acceptance: bit 0 accepts the trial, bit 1 discards
it, which post-selects the register into an initialized state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .phase import PhaseStream, wrap_angle
from .signals import dichotomic_array


@dataclass(frozen=True)
class Definite:
    """A qubit pinned to a classical bit value."""

    bit: int

    def __post_init__(self) -> None:
        if self.bit not in (0, 1):
            raise ValueError(f"bit must be 0 or 1, got {self.bit!r}")


@dataclass(frozen=True)
class Balanced:
    """A qubit that reads the shared phase at detector angle ``alpha``.

    Over uniform phases it is green or red with probability 1/2 each; the
    angle is observable only through correlations with other qubits.
    """

    alpha: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", wrap_angle(self.alpha))


QubitState = Union[Definite, Balanced]


@dataclass(frozen=True)
class TrialRecord:
    """Realized bits of one measurement trial plus its acceptance verdict."""

    t: int
    bits: tuple[int, ...]
    accepted: bool


@dataclass
class VirtualRegister:
    """Qubits measured against one shared phase stream."""

    qubits: list[QubitState]
    stream: PhaseStream
    signal_index: int = 0

    def __post_init__(self) -> None:
        if not self.qubits:
            raise ValueError("register needs at least one qubit")
        for q in self.qubits:
            if not isinstance(q, (Definite, Balanced)):
                raise TypeError(f"not a qubit state: {q!r}")
        if not 0 <= self.signal_index < len(self.qubits):
            raise ValueError(f"signal_index {self.signal_index} outside register")

    @property
    def angles(self) -> tuple:
        """Per-qubit detector angle; ``None`` for Definite qubits."""
        return tuple(q.alpha if isinstance(q, Balanced) else None for q in self.qubits)


def _trial_bits(qubits: Sequence[QubitState], phi: np.ndarray) -> np.ndarray:
    """Bit outcomes, one row per qubit, one column per trial."""
    rows = []
    for q in qubits:
        if isinstance(q, Definite):
            rows.append(np.full(phi.shape, q.bit, dtype=np.int8))
        else:
            # green (+1) -> bit 0, red (-1) -> bit 1
            rows.append(((1 - dichotomic_array(phi, q.alpha)) // 2).astype(np.int8))
    return np.stack(rows)


def measure_trial(register: VirtualRegister) -> TrialRecord:
    """Run one shared-phase measurement across the whole register."""
    t, phi = register.stream.take(1)
    bits = _trial_bits(register.qubits, phi)[:, 0]
    accepted = bits[register.signal_index] == 0
    return TrialRecord(int(t[0]), tuple(int(b) for b in bits), bool(accepted))


def initialize(register: VirtualRegister, trials: int) -> list[TrialRecord]:
    """Measure ``trials`` times and keep only the accepted records.

    A trial is accepted when the signal qubit reads bit 0 (green); rejected
    trials produce no output at all.  Every returned record therefore has
    signal bit 0.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    t, phi = register.stream.take(trials)
    bits = _trial_bits(register.qubits, phi)
    keep = np.flatnonzero(bits[register.signal_index] == 0)
    return [
        TrialRecord(int(t[i]), tuple(int(b) for b in bits[:, i]), True) for i in keep
    ]


def hadamard(q: QubitState, default_alpha: float = 0.0) -> QubitState:
    """Hadamard rule on a virtual qubit state.

    A Balanced qubit, read in the rotated basis, stops being random and
    becomes ``Definite(0)``; either Definite bit becomes
    ``Balanced(default_alpha)``.  Both definite inputs map to the same
    output, so this rule is not an involution; contrast with the unitary
    gate in :mod:`phasebit.oracle`, where ``H @ H == I``.
    """
    if isinstance(q, Balanced):
        return Definite(0)
    if isinstance(q, Definite):
        return Balanced(default_alpha)
    raise TypeError(f"not a qubit state: {q!r}")


def cnot(control_bit: int, target_bit: int) -> int:
    """Controlled-NOT on realized bit values: returns ``target XOR control``.

    The control bit itself is never modified.
    """
    if control_bit not in (0, 1):
        raise ValueError(f"control bit must be 0 or 1, got {control_bit!r}")
    if target_bit not in (0, 1):
        raise ValueError(f"target bit must be 0 or 1, got {target_bit!r}")
    return target_bit ^ control_bit


def apply_cnot_to_records(
    records: Sequence[TrialRecord], control: int, target: int
) -> list[TrialRecord]:
    """Apply the controlled-NOT to the realized bits of every record.

    Only the target column changes.  Acceptance verdicts belong to the
    measurement history and are kept as-is.
    """
    if control == target:
        raise ValueError("control and target must differ")
    out = []
    for rec in records:
        width = len(rec.bits)
        if not (0 <= control < width and 0 <= target < width):
            raise ValueError(f"qubit index outside record of width {width}")
        bits = list(rec.bits)
        bits[target] = cnot(bits[control], bits[target])
        out.append(TrialRecord(rec.t, tuple(bits), rec.accepted))
    return out
