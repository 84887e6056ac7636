"""Exact two-term Pauli structure of arithmetic-progression diagonals.

A 2**n diagonal with entries first + diff*x expands over the Pauli basis
with nonzero weight only on the identity and the n single-Z strings:

    alpha_identity = first + diff * (2**n - 1) / 2
    alpha_z[j]     = -diff * 2**(j-2)        for 1-based qubit j

Strings containing X or Y have zero diagonal, and any product of two or
more Z factors averages to zero against an affine ramp, so everything else
drops out. This is what lets exp(-i*theta*D) compile into one global phase
plus n independent Z rotations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError


@dataclass(frozen=True)
class PauliDiagonalDecomposition:
    alpha_identity: float
    alpha_z: tuple[float, ...]
    n: int


def pauli_decompose_ap(first: float, diff: float, n: int) -> PauliDiagonalDecomposition:
    """Decompose diag(first + diff*x, x = 0 .. 2**n - 1)."""
    if n < 1:
        raise ParameterError(f"need at least one qubit, got n = {n}")
    alpha_identity = first + diff * (2**n - 1) / 2.0
    alpha_z = tuple(-diff * 2.0 ** (j - 2) for j in range(1, n + 1))
    return PauliDiagonalDecomposition(alpha_identity=alpha_identity, alpha_z=alpha_z, n=n)


def reconstruct_diagonal(decomp: PauliDiagonalDecomposition) -> np.ndarray:
    """Diagonal entries value(x) = alpha_identity + sum_j alpha_z[j] * (-1)**x_j.

    Inverts pauli_decompose_ap exactly: the result is first + diff*x for
    every basis index x under the little-endian bit convention.
    """
    x = np.arange(2**decomp.n)
    values = np.full(x.shape, decomp.alpha_identity, dtype=float)
    for j in range(1, decomp.n + 1):
        signs = 1.0 - 2.0 * ((x >> (j - 1)) & 1)
        values += decomp.alpha_z[j - 1] * signs
    return values
