"""Arithmetic-progression grid of Laplace evaluation points."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError


@dataclass(frozen=True)
class APSpec:
    """Evaluation points s_x = (first_real + diff_real*x) + i*(first_imag + diff_imag*x).

    The real and imaginary parts are encoded as two diagonal matrices with
    entries in arithmetic progression; eigenvalue index equals basis index,
    which fixes which output amplitude carries which s node. Convergence of
    the transform requires Re(s_x) >= 0 for every x, checked at construction.
    """

    first_real: float
    diff_real: float
    first_imag: float
    diff_imag: float
    n_sys: int

    def __post_init__(self):
        if self.n_sys < 1:
            raise ParameterError(f"n_sys must be at least 1, got {self.n_sys}")
        last = self.first_real + self.diff_real * (self.n_points - 1)
        if self.first_real < 0 or last < 0:
            raise ParameterError(
                "all real parts must be nonnegative; "
                f"endpoints are {self.first_real} and {last}"
            )

    @property
    def n_points(self) -> int:
        return 2**self.n_sys

    @property
    def lh_equal(self) -> bool:
        """True when real and imaginary progressions coincide (L = H)."""
        return self.first_real == self.first_imag and self.diff_real == self.diff_imag

    def s_node(self, x: int) -> complex:
        return complex(self.first_real + self.diff_real * x, self.first_imag + self.diff_imag * x)

    def s_nodes(self) -> np.ndarray:
        x = np.arange(self.n_points)
        return (self.first_real + self.diff_real * x) + 1j * (self.first_imag + self.diff_imag * x)
