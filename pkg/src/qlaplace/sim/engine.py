"""Dense statevector simulation of the supported gate set."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ResourceLimitError, ShapeError
from .circuit import Circuit
from .gates import Gate, target_matrix

MAX_QUBITS = 24
MAX_DENSE_QUBITS = 10


@dataclass
class QubitState:
    n_qubits: int
    amplitudes: np.ndarray


def init_state(n: int) -> QubitState:
    """|0...0> on n qubits; n is capped at 24 as a memory guard."""
    if not 1 <= n <= MAX_QUBITS:
        raise ResourceLimitError(f"statevector supports 1..{MAX_QUBITS} qubits, got {n}")
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = 1.0
    return QubitState(n_qubits=n, amplitudes=amps)


def amplitude(state: QubitState, basis_index: int) -> complex:
    if not 0 <= basis_index < len(state.amplitudes):
        raise ShapeError(f"basis index {basis_index} out of range")
    return complex(state.amplitudes[basis_index])


def _apply_inplace(amps: np.ndarray, n: int, gate: Gate) -> None:
    """Apply one gate to the flat amplitude array.

    The array is viewed as an n-axis tensor where axis a holds qubit
    n-1-a (bit q of the flat index is qubit q). Control qubits select a
    sub-tensor by fixing their axes to 1; the target unitary then acts on
    the target axes of that view, so untouched branches never move.
    """
    for q in (*gate.targets, *gate.controls):
        if not 0 <= q < n:
            raise ShapeError(f"qubit {q} out of range for {n} qubits")
    matrix = target_matrix(gate)
    k = len(gate.targets)
    psi = amps.reshape([2] * n)
    index = [slice(None)] * n
    for c in gate.controls:
        index[n - 1 - c] = 1
    sub = psi[tuple(index)]
    remaining = [q for q in range(n - 1, -1, -1) if q not in gate.controls]
    # gate index bit i lives on targets[i]; axis order MSB-first for the reshape
    front = [remaining.index(t) for t in reversed(gate.targets)]
    moved = np.moveaxis(sub, front, range(k))
    worked = (matrix @ moved.reshape(2**k, -1)).reshape(moved.shape)
    sub[...] = np.moveaxis(worked, range(k), front)


def apply_gate(state: QubitState, gate: Gate) -> QubitState:
    amps = state.amplitudes.copy()
    _apply_inplace(amps, state.n_qubits, gate)
    return QubitState(state.n_qubits, amps)


def apply_circuit(state: QubitState, circuit: Circuit) -> QubitState:
    """Left-to-right fold of the circuit's gates over one amplitude buffer."""
    if circuit.n_qubits != state.n_qubits:
        raise ShapeError(
            f"circuit width {circuit.n_qubits} does not match state width {state.n_qubits}"
        )
    amps = state.amplitudes.copy()
    for gate in circuit.gates:
        _apply_inplace(amps, state.n_qubits, gate)
    return QubitState(state.n_qubits, amps)


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Dense 2**n x 2**n unitary of the circuit, by evolving every basis column."""
    n = circuit.n_qubits
    if n > MAX_DENSE_QUBITS:
        raise ResourceLimitError(f"dense unitary extraction is capped at {MAX_DENSE_QUBITS} qubits")
    dim = 2**n
    unitary = np.eye(dim, dtype=complex)
    for col in range(dim):
        vec = unitary[:, col].copy()
        for gate in circuit.gates:
            _apply_inplace(vec, n, gate)
        unitary[:, col] = vec
    return unitary
