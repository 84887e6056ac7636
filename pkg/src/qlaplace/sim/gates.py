"""Gate set for the dense statevector engine.

Only the gates the transform circuits need: X, H, the three axis rotations,
phase shifts, (controlled) global phases, and a deterministic multi-qubit
amplitude loader with its transpose. Every gate carries at most two control
qubits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..errors import ParameterError, ShapeError

MAX_CONTROLS = 2
_LOAD_NORM_TOL = 1e-12


class GateKind(Enum):
    PAULI_X = "x"
    HADAMARD = "h"
    RY = "ry"
    RX = "rx"
    RZ = "rz"
    PHASE_SHIFT = "p"
    GLOBAL_PHASE = "gphase"
    AMP_LOAD = "load"
    AMP_LOAD_T = "load_t"

    def __str__(self) -> str:
        return self.value


_ANGLED = {GateKind.RY, GateKind.RX, GateKind.RZ, GateKind.PHASE_SHIFT, GateKind.GLOBAL_PHASE}
_LOADS = {GateKind.AMP_LOAD, GateKind.AMP_LOAD_T}


@dataclass(frozen=True, eq=False)
class Gate:
    """One gate application: target qubits, optional controls, parameters.

    Target bit i of an amplitude loader addresses ``targets[i]``, matching
    the little-endian index convention. A GLOBAL_PHASE has no targets; with
    controls attached it multiplies exactly the basis states whose control
    bits are all 1, i.e. it acts as a phase shift on the control pattern.
    """

    kind: GateKind
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()
    angle: float = 0.0
    amps: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.controls) > MAX_CONTROLS:
            raise ParameterError(f"at most {MAX_CONTROLS} controls are allowed, got {len(self.controls)}")
        if len(set(self.targets)) != len(self.targets) or len(set(self.controls)) != len(self.controls):
            raise ShapeError("duplicate qubit in targets or controls")
        if set(self.targets) & set(self.controls):
            raise ShapeError("targets and controls must be disjoint")
        if self.kind in _LOADS:
            if self.amps is None or len(self.amps) != 2 ** len(self.targets):
                raise ShapeError("amplitude loader needs 2**len(targets) amplitudes")
            norm = float(np.linalg.norm(self.amps))
            if abs(norm - 1.0) > _LOAD_NORM_TOL:
                raise ParameterError(f"amplitude loader requires a unit vector, norm was {norm}")
        elif self.kind is GateKind.GLOBAL_PHASE:
            if self.targets:
                raise ShapeError("a global phase takes no target qubits")
        elif len(self.targets) != 1:
            raise ShapeError(f"{self.kind} acts on exactly one target qubit")

    @property
    def arity(self) -> int:
        return len(self.controls)


def pauli_x(target: int, controls: tuple[int, ...] = ()) -> Gate:
    return Gate(GateKind.PAULI_X, (target,), tuple(controls))


def hadamard(target: int, controls: tuple[int, ...] = ()) -> Gate:
    return Gate(GateKind.HADAMARD, (target,), tuple(controls))


def ry(angle: float, target: int, controls: tuple[int, ...] = ()) -> Gate:
    return Gate(GateKind.RY, (target,), tuple(controls), angle=float(angle))


def rx(angle: float, target: int, controls: tuple[int, ...] = ()) -> Gate:
    return Gate(GateKind.RX, (target,), tuple(controls), angle=float(angle))


def rz(angle: float, target: int, controls: tuple[int, ...] = ()) -> Gate:
    return Gate(GateKind.RZ, (target,), tuple(controls), angle=float(angle))


def phase_shift(angle: float, target: int, controls: tuple[int, ...] = ()) -> Gate:
    return Gate(GateKind.PHASE_SHIFT, (target,), tuple(controls), angle=float(angle))


def global_phase(angle: float, controls: tuple[int, ...] = ()) -> Gate:
    return Gate(GateKind.GLOBAL_PHASE, (), tuple(controls), angle=float(angle))


def amplitude_load(amps, targets) -> Gate:
    a = np.asarray(amps, dtype=complex)
    a.setflags(write=False)
    return Gate(GateKind.AMP_LOAD, tuple(targets), (), amps=a)


def amplitude_load_transpose(amps, targets) -> Gate:
    a = np.asarray(amps, dtype=complex)
    a.setflags(write=False)
    return Gate(GateKind.AMP_LOAD_T, tuple(targets), (), amps=a)


def completion_unitary(amps: np.ndarray) -> np.ndarray:
    """Deterministic unitary whose first column equals the given unit vector.

    Householder completion: reflect through w = a - alpha*e0 with
    alpha = -exp(i*arg(a[0])), then fix the first column's phase with
    diag(alpha, 1, ..., 1). The sign choice keeps ||w|| away from zero,
    and determinism makes the transpose of the loader well defined.
    """
    a = np.asarray(amps, dtype=complex)
    dim = len(a)
    alpha = -np.exp(1j * np.angle(a[0])) if a[0] != 0 else -1.0 + 0.0j
    w = a.copy()
    w[0] -= alpha
    wnorm2 = float(np.vdot(w, w).real)
    if wnorm2 < 1e-28:
        householder = np.eye(dim, dtype=complex)
    else:
        householder = np.eye(dim, dtype=complex) - (2.0 / wnorm2) * np.outer(w, w.conj())
    phase_fix = np.eye(dim, dtype=complex)
    phase_fix[0, 0] = alpha
    return householder @ phase_fix


_H_MATRIX = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / math.sqrt(2.0)
_X_MATRIX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


def target_matrix(gate: Gate) -> np.ndarray:
    """Unitary on the target space (controls handled by the engine)."""
    kind, theta = gate.kind, gate.angle
    if kind is GateKind.PAULI_X:
        return _X_MATRIX
    if kind is GateKind.HADAMARD:
        return _H_MATRIX
    if kind is GateKind.RY:
        c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind is GateKind.RX:
        c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind is GateKind.RZ:
        return np.array([[np.exp(-0.5j * theta), 0.0], [0.0, np.exp(0.5j * theta)]], dtype=complex)
    if kind is GateKind.PHASE_SHIFT:
        return np.array([[1.0, 0.0], [0.0, np.exp(1j * theta)]], dtype=complex)
    if kind is GateKind.GLOBAL_PHASE:
        return np.array([[np.exp(1j * theta)]], dtype=complex)
    if kind is GateKind.AMP_LOAD:
        return completion_unitary(gate.amps)
    if kind is GateKind.AMP_LOAD_T:
        return completion_unitary(gate.amps).T.copy()
    raise ParameterError(f"unknown gate kind {kind!r}")


def transpose_gate(gate: Gate) -> Gate:
    """Matrix transpose of a gate, with controls and targets preserved.

    RY is the only rotation whose matrix is not symmetric, so it negates
    its angle; diagonal and symmetric kinds are unchanged; the amplitude
    loaders swap into each other. A controlled gate is block-diagonal in
    the control pattern, so transposition acts blockwise on the target.
    """
    if gate.kind is GateKind.RY:
        return Gate(GateKind.RY, gate.targets, gate.controls, angle=-gate.angle)
    if gate.kind is GateKind.AMP_LOAD:
        return Gate(GateKind.AMP_LOAD_T, gate.targets, gate.controls, amps=gate.amps)
    if gate.kind is GateKind.AMP_LOAD_T:
        return Gate(GateKind.AMP_LOAD, gate.targets, gate.controls, amps=gate.amps)
    return gate
