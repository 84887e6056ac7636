"""Integral kernel for the Laplace LCU quadrature."""

from __future__ import annotations

import numpy as np

from ..errors import ParameterError


def kernel_f(k, beta: float):
    """Evaluate 1 / (2*pi * exp(-2**beta) * exp((1 + i*k)**beta)).

    The complex power uses the principal branch; 1 + i*k stays off the
    negative real axis for real k, so the branch cut is never crossed.
    The modulus decays like exp(-cos(beta*pi/2) * |k|**beta), which is what
    makes truncating the k-integral to [-K, K] viable.

    Accepts a scalar or an ndarray of real k values; beta must lie in (0, 1).
    """
    if not 0.0 < beta < 1.0:
        raise ParameterError(f"beta must lie in the open interval (0, 1), got {beta}")
    kc = np.asarray(k, dtype=complex)
    val = 1.0 / (2.0 * np.pi * np.exp(-(2.0**beta)) * np.exp((1.0 + 1j * kc) ** beta))
    if np.ndim(k) == 0:
        return complex(val)
    return val
