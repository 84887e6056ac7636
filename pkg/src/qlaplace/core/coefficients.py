"""Quadrature weights for the LCU sum and the classical reference sum."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .grid import LaplaceGrid
from .kernel import kernel_f
from .signal import SignalFunction, sample_on_grid


@dataclass(frozen=True, eq=False)
class LcuCoefficients:
    """Left-endpoint Riemann weights of the double quadrature.

    c[j]     = h_k * f(k_j) / (1 - i*k_j)
    c_hat[l] = h_t * g(t_l)

    norm_c and norm_c_hat are the exact 1-norms used to normalize the PREP
    amplitudes. A signal that vanishes at every node makes c_hat identically
    zero; such coefficients are flagged degenerate and refused by circuit
    construction, since the PREP state would be undefined.
    """

    c: np.ndarray
    c_hat: np.ndarray
    norm_c: float
    norm_c_hat: float

    @property
    def degenerate(self) -> bool:
        return self.norm_c_hat == 0.0


def compute_coefficients(grid: LaplaceGrid, signal: SignalFunction) -> LcuCoefficients:
    """Evaluate both weight vectors on the grid nodes."""
    k = grid.k_nodes()
    c = grid.h_k * np.asarray(kernel_f(k, grid.beta)) / (1.0 - 1j * k)
    c_hat = (grid.h_t * sample_on_grid(signal, grid)).astype(complex)
    return LcuCoefficients(
        c=c,
        c_hat=c_hat,
        norm_c=float(np.sum(np.abs(c))),
        norm_c_hat=float(np.sum(np.abs(c_hat))),
    )


def lchs_discrete_sum(coeffs: LcuCoefficients, grid: LaplaceGrid, s: complex) -> complex:
    """Brute-force reference value sum_{j,l} c_j c_hat_l exp(-i t_l (k_j*a + b)).

    s = a + i*b is one Laplace node. This is the scalar form of the operator
    sum the circuit realizes, evaluated by a literal double loop in double
    precision; every circuit result is checked against it.
    """
    a, b = complex(s).real, complex(s).imag
    c = coeffs.c
    c_hat = coeffs.c_hat
    total = 0.0 + 0.0j
    for j in range(grid.m_k):
        k_j = grid.k_node(j)
        for l in range(grid.m_t):
            t_l = grid.t_node(l)
            total += c[j] * c_hat[l] * cmath.exp(-1j * t_l * (k_j * a + b))
    return total
