"""Assembly, simulation, and readout of the full transform circuit."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..core.coefficients import LcuCoefficients, compute_coefficients, lchs_discrete_sum
from ..errors import DegenerateSignalError, ResourceLimitError
from ..sim.circuit import Circuit, concat, embed, transpose_circuit
from ..sim.engine import MAX_QUBITS, apply_circuit, init_state
from ..sim.gates import hadamard
from .config import QltConfig
from .prep import prep_complex_weights
from .select import build_select


@dataclass(frozen=True)
class QltCircuit:
    """The six stages, each over the full register.

    Application order is prep_j, prep_l, system_init, select, unprep_l,
    unprep_j. Both un-preparation stages are circuit transposes (not
    adjoints) of their preparation stages, so complex weights re-enter the
    readout unconjugated.
    """

    prep_j: Circuit
    prep_l: Circuit
    system_init: Circuit
    select: Circuit
    unprep_j: Circuit
    unprep_l: Circuit

    @property
    def n_qubits(self) -> int:
        return self.select.n_qubits


@dataclass(frozen=True, eq=False)
class QltResult:
    """Post-selected output: amplitudes with both index registers on zero.

    values[x] = raw_amplitudes[x] * rescale_factor is the discrete-transform
    value at s_x, where rescale_factor = ||c||_1 * ||c_hat||_1 * sqrt(2**n_sys)
    undoes the LCU normalization and the equal-superposition weight.
    success_weight is the squared norm of the projected branch.
    """

    s_nodes: np.ndarray
    raw_amplitudes: np.ndarray
    values: np.ndarray
    rescale_factor: float
    success_weight: float


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    """Circuit values against the classical double-loop reference."""

    s_nodes: np.ndarray
    circuit_values: np.ndarray
    classical_values: np.ndarray
    per_s_diffs: np.ndarray
    max_abs_diff: float


def _coefficients_or_refuse(config: QltConfig) -> LcuCoefficients:
    coeffs = compute_coefficients(config.grid, config.signal)
    if coeffs.degenerate:
        raise DegenerateSignalError("signal vanishes on every grid node; PREP is undefined")
    return coeffs


def build_qlt(config: QltConfig) -> QltCircuit:
    """Assemble all six stages for the given configuration."""
    coeffs = _coefficients_or_refuse(config)
    n = config.n_total
    prep_j = embed(prep_complex_weights(coeffs.c), config.j_offset, n)
    prep_l = embed(prep_complex_weights(coeffs.c_hat), config.l_offset, n)
    system_init = Circuit(n, tuple(hadamard(config.system_offset + q) for q in range(config.ap.n_sys)))
    select = build_select(config)
    return QltCircuit(
        prep_j=prep_j,
        prep_l=prep_l,
        system_init=system_init,
        select=select,
        unprep_j=transpose_circuit(prep_j),
        unprep_l=transpose_circuit(prep_l),
    )


def combined_circuit(qlt: QltCircuit) -> Circuit:
    return concat(qlt.prep_j, qlt.prep_l, qlt.system_init, qlt.select, qlt.unprep_l, qlt.unprep_j)


def run_qlt(config: QltConfig) -> QltResult:
    """Simulate the circuit on |0...0> and read the post-selected branch.

    With the index registers in the low-to-high layout (system, l, j), the
    branch with both index registers at zero occupies the first 2**n_sys
    flat amplitudes, one per s node.
    """
    if config.n_total > MAX_QUBITS:
        raise ResourceLimitError(
            f"configuration needs {config.n_total} qubits; the guard is {MAX_QUBITS}"
        )
    coeffs = _coefficients_or_refuse(config)
    qlt = build_qlt(config)
    state = apply_circuit(init_state(config.n_total), combined_circuit(qlt))
    n_points = config.ap.n_points
    raw = state.amplitudes[:n_points].copy()
    rescale = coeffs.norm_c * coeffs.norm_c_hat * math.sqrt(n_points)
    return QltResult(
        s_nodes=config.ap.s_nodes(),
        raw_amplitudes=raw,
        values=raw * rescale,
        rescale_factor=rescale,
        success_weight=float(np.sum(np.abs(raw) ** 2)),
    )


def verify_against_classical(config: QltConfig) -> ComparisonReport:
    """Run the circuit and diff every output against the double-loop sum."""
    result = run_qlt(config)
    coeffs = compute_coefficients(config.grid, config.signal)
    classical = np.array(
        [lchs_discrete_sum(coeffs, config.grid, s) for s in result.s_nodes], dtype=complex
    )
    diffs = np.abs(result.values - classical)
    return ComparisonReport(
        s_nodes=result.s_nodes,
        circuit_values=result.values,
        classical_values=classical,
        per_s_diffs=diffs,
        max_abs_diff=float(diffs.max()),
    )
