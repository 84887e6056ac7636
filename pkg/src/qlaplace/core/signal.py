"""Time-domain input signals and their closed-form transforms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, ParameterError, ShapeError, UnsupportedOracleError
from .grid import LaplaceGrid

EXP_DECAY = "exp_decay"
EXP_DECAY_SINE = "exp_decay_sine"
TABULATED = "tabulated"


@dataclass(frozen=True)
class SignalFunction:
    """A signal g(t) on [0, inf): a named closed form or raw grid samples.

    The closed forms exp(-rate*t) and exp(-rate*t)*sin(frequency*t) are
    absolutely integrable for rate > 0, which construction enforces.
    A tabulated signal is defined only on the t grid it is later paired
    with; its sample count must equal that grid's m_t.
    """

    kind: str
    rate: float = 0.0
    frequency: float = 0.0
    samples: tuple[float, ...] | None = None


def exp_decay(rate: float) -> SignalFunction:
    """g(t) = exp(-rate*t)."""
    if rate <= 0:
        raise ParameterError(f"decay rate must be positive for integrability, got {rate}")
    return SignalFunction(kind=EXP_DECAY, rate=float(rate))


def exp_decay_sine(rate: float, frequency: float) -> SignalFunction:
    """g(t) = exp(-rate*t) * sin(frequency*t)."""
    if rate <= 0:
        raise ParameterError(f"decay rate must be positive for integrability, got {rate}")
    return SignalFunction(kind=EXP_DECAY_SINE, rate=float(rate), frequency=float(frequency))


def tabulated(samples) -> SignalFunction:
    """Signal given by its values at the grid's t nodes."""
    return SignalFunction(kind=TABULATED, samples=tuple(float(v) for v in samples))


def sample_on_grid(signal: SignalFunction, grid: LaplaceGrid) -> np.ndarray:
    """Values g(t_l) for l = 0 .. m_t - 1."""
    t = grid.t_nodes()
    if signal.kind == EXP_DECAY:
        return np.exp(-signal.rate * t)
    if signal.kind == EXP_DECAY_SINE:
        return np.exp(-signal.rate * t) * np.sin(signal.frequency * t)
    if signal.kind == TABULATED:
        if signal.samples is None or len(signal.samples) != grid.m_t:
            got = 0 if signal.samples is None else len(signal.samples)
            raise ShapeError(f"tabulated signal has {got} samples but the grid has m_t = {grid.m_t}")
        return np.asarray(signal.samples, dtype=float)
    raise ParameterError(f"unknown signal kind {signal.kind!r}")


def analytic_laplace(signal: SignalFunction, s: complex) -> complex:
    """Closed-form transform of the signal at s, from standard tables.

    exp_decay(a)          -> 1 / (s + a)
    exp_decay_sine(a, b)  -> b / ((s + a)**2 + b**2)

    Requires Re(s) + a > 0; tabulated signals have no closed form.
    """
    if signal.kind == TABULATED:
        raise UnsupportedOracleError("tabulated signals have no closed-form transform")
    s = complex(s)
    if s.real + signal.rate <= 0:
        raise DomainError(f"need Re(s) + rate > 0, got Re(s) = {s.real}, rate = {signal.rate}")
    if signal.kind == EXP_DECAY:
        return 1.0 / (s + signal.rate)
    if signal.kind == EXP_DECAY_SINE:
        b = signal.frequency
        return b / ((s + signal.rate) ** 2 + b**2)
    raise ParameterError(f"unknown signal kind {signal.kind!r}")
