"""Ordered gate sequences over a sized qubit register."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..errors import ShapeError
from .gates import Gate, GateKind, transpose_gate


@dataclass(frozen=True)
class Circuit:
    """Gates applied left to right to a register of n_qubits."""

    n_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for q in (*g.targets, *g.controls):
                if not 0 <= q < self.n_qubits:
                    raise ShapeError(f"qubit {q} out of range for a {self.n_qubits}-qubit circuit")

    def __len__(self) -> int:
        return len(self.gates)


def transpose_circuit(circuit: Circuit) -> Circuit:
    """The circuit whose unitary is the matrix transpose of the input's.

    Gate order reverses and each gate becomes its own transpose. This is
    the plain transpose, not the adjoint: complex entries are not
    conjugated, which is exactly what lets an un-preparation stage hand
    back unconjugated weights.
    """
    return Circuit(circuit.n_qubits, tuple(transpose_gate(g) for g in reversed(circuit.gates)))


def gate_count(circuit: Circuit) -> Counter:
    """Tally keyed by (kind, control arity); sum of values is the total."""
    return Counter((g.kind, g.arity) for g in circuit.gates)


def count_by_arity(circuit: Circuit) -> Counter:
    """Tally keyed by control arity alone."""
    return Counter(g.arity for g in circuit.gates)


def embed(circuit: Circuit, offset: int, n_total: int) -> Circuit:
    """Place a register-local circuit at a qubit offset of a wider register."""
    if offset < 0 or offset + circuit.n_qubits > n_total:
        raise ShapeError(
            f"cannot place a {circuit.n_qubits}-qubit circuit at offset {offset} in {n_total} qubits"
        )
    shifted = tuple(
        Gate(
            g.kind,
            tuple(t + offset for t in g.targets),
            tuple(c + offset for c in g.controls),
            angle=g.angle,
            amps=g.amps,
        )
        for g in circuit.gates
    )
    return Circuit(n_total, shifted)


def concat(*circuits: Circuit) -> Circuit:
    """Join circuits over the same register, in application order."""
    if not circuits:
        raise ShapeError("need at least one circuit")
    n = circuits[0].n_qubits
    if any(c.n_qubits != n for c in circuits):
        raise ShapeError("cannot concatenate circuits of different widths")
    gates: list[Gate] = []
    for c in circuits:
        gates.extend(c.gates)
    return Circuit(n, tuple(gates))
