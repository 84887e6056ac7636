"""Classical mathematics: kernel, grids, weights, closed forms, Pauli structure."""

from .apspec import APSpec
from .coefficients import LcuCoefficients, compute_coefficients, lchs_discrete_sum
from .grid import DEFAULT_BETA, DEFAULT_K_MAX, DEFAULT_T_MAX, LaplaceGrid, build_grid
from .kernel import kernel_f
from .pauli import PauliDiagonalDecomposition, pauli_decompose_ap, reconstruct_diagonal
from .signal import (
    EXP_DECAY,
    EXP_DECAY_SINE,
    TABULATED,
    SignalFunction,
    analytic_laplace,
    exp_decay,
    exp_decay_sine,
    sample_on_grid,
    tabulated,
)

__all__ = [
    "APSpec",
    "DEFAULT_BETA",
    "DEFAULT_K_MAX",
    "DEFAULT_T_MAX",
    "EXP_DECAY",
    "EXP_DECAY_SINE",
    "TABULATED",
    "LaplaceGrid",
    "LcuCoefficients",
    "PauliDiagonalDecomposition",
    "SignalFunction",
    "analytic_laplace",
    "build_grid",
    "compute_coefficients",
    "exp_decay",
    "exp_decay_sine",
    "kernel_f",
    "lchs_discrete_sum",
    "pauli_decompose_ap",
    "reconstruct_diagonal",
    "sample_on_grid",
    "tabulated",
]
