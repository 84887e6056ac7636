"""Ancilla state preparation for real and complex LCU weights."""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..errors import DegenerateSignalError, ParameterError
from ..sim.circuit import Circuit
from ..sim.gates import amplitude_load, pauli_x, phase_shift, ry


def _require_power_of_two(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise ParameterError(f"weight vector length must be a power of two, got {n}")
    return n.bit_length() - 1


def prep_real_weights(weights) -> Circuit:
    """Map |0..0> to the state with amplitude sqrt(w_j / sum(w)) on |j>.

    Two weights compile to a single RY(gamma) with
    gamma = 2*arccos(sqrt(w_0 / (w_0 + w_1))); longer vectors use the
    amplitude loader. All weights must be nonnegative and at least one
    positive.
    """
    w = np.asarray(weights, dtype=float)
    n_qubits = _require_power_of_two(len(w))
    if np.any(w < 0):
        raise ParameterError("real weights must be nonnegative")
    total = float(w.sum())
    if total == 0.0:
        raise DegenerateSignalError("all weights are zero; the prepared state is undefined")
    amps = np.sqrt(w / total)
    if len(w) == 1:
        return Circuit(0, ())
    if len(w) == 2:
        gamma = 2.0 * math.acos(min(1.0, amps[0]))
        return Circuit(1, (ry(gamma, 0),))
    return Circuit(n_qubits, (amplitude_load(amps, tuple(range(n_qubits))),))


def principal_sqrt(values) -> np.ndarray:
    """Entrywise principal square root, with negative reals mapped to +i*sqrt(|.|).

    numpy's sqrt sends -r - 0.0j to -i*sqrt(r); rebuilding exact-real entries
    with a +0.0 imaginary part pins the branch on the cut.
    """
    v = np.asarray(values, dtype=complex)
    v = np.where(v.imag == 0.0, v.real + 0.0j, v)
    return np.sqrt(v)


def prep_complex_weights(c) -> Circuit:
    """Map |0..0> to amplitudes a_j = sqrt(c_j) / sqrt(sum_k |c_k|).

    The amplitudes square to the normalized weights, a_j**2 = c_j / ||c||_1,
    which is the property the transpose-based un-preparation turns into
    unconjugated c_j factors. Two weights compile to the explicit sequence

        RY(theta), P(theta_2), X, P(theta_1), X

    with cos(theta/2) = |a_0|, sin(theta/2) = |a_1|, theta_1 = arg(a_0),
    theta_2 = arg(a_1); longer vectors use the amplitude loader.
    """
    cv = np.asarray(c, dtype=complex)
    n_qubits = _require_power_of_two(len(cv))
    norm = float(np.sum(np.abs(cv)))
    if norm == 0.0:
        raise DegenerateSignalError("all weights are zero; the prepared state is undefined")
    amps = principal_sqrt(cv) / math.sqrt(norm)
    if len(cv) == 1:
        return Circuit(0, ())
    if len(cv) == 2:
        r0, r1 = abs(amps[0]), abs(amps[1])
        theta = 2.0 * math.atan2(r1, r0)
        theta_1 = cmath.phase(amps[0])
        theta_2 = cmath.phase(amps[1])
        gates = (ry(theta, 0), phase_shift(theta_2, 0), pauli_x(0), phase_shift(theta_1, 0), pauli_x(0))
        return Circuit(1, gates)
    return Circuit(n_qubits, (amplitude_load(amps, tuple(range(n_qubits))),))
