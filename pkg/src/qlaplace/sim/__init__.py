"""Minimal dense statevector engine with the exact gate set the circuits need."""

from .circuit import Circuit, concat, count_by_arity, embed, gate_count, transpose_circuit
from .engine import (
    MAX_DENSE_QUBITS,
    MAX_QUBITS,
    QubitState,
    amplitude,
    apply_circuit,
    apply_gate,
    circuit_unitary,
    init_state,
)
from .gates import (
    Gate,
    GateKind,
    amplitude_load,
    amplitude_load_transpose,
    completion_unitary,
    global_phase,
    hadamard,
    pauli_x,
    phase_shift,
    rx,
    ry,
    rz,
    target_matrix,
    transpose_gate,
)

__all__ = [
    "Circuit",
    "Gate",
    "GateKind",
    "MAX_DENSE_QUBITS",
    "MAX_QUBITS",
    "QubitState",
    "amplitude",
    "amplitude_load",
    "amplitude_load_transpose",
    "apply_circuit",
    "apply_gate",
    "circuit_unitary",
    "completion_unitary",
    "concat",
    "count_by_arity",
    "embed",
    "gate_count",
    "global_phase",
    "hadamard",
    "init_state",
    "pauli_x",
    "phase_shift",
    "rx",
    "ry",
    "rz",
    "target_matrix",
    "transpose_circuit",
    "transpose_gate",
]
