"""Configuration for assembling and running the transform circuit."""

from __future__ import annotations

from dataclasses import dataclass

from ..core.apspec import APSpec
from ..core.grid import LaplaceGrid
from ..core.signal import SignalFunction
from ..errors import ParameterError

VARIANT_FULL = "full"
VARIANT_REDUCED = "reduced"
VARIANTS = (VARIANT_FULL, VARIANT_REDUCED)


@dataclass(frozen=True)
class QltConfig:
    """Everything the circuit builder needs.

    Register layout over the flat basis index, low bits first:
      system register   n_sys qubits  (holds the s nodes)
      l index register  d' qubits     (t quadrature, d' = log2 m_t)
      j index register  d qubits      (k quadrature, d  = log2 m_k)
    """

    ap: APSpec
    grid: LaplaceGrid
    signal: SignalFunction
    select_variant: str = VARIANT_FULL

    def __post_init__(self):
        if self.select_variant not in VARIANTS:
            raise ParameterError(
                f"select_variant must be one of {VARIANTS}, got {self.select_variant!r}"
            )

    @property
    def n_total(self) -> int:
        return self.ap.n_sys + self.grid.qubits_t + self.grid.qubits_k

    @property
    def system_offset(self) -> int:
        return 0

    @property
    def l_offset(self) -> int:
        return self.ap.n_sys

    @property
    def j_offset(self) -> int:
        return self.ap.n_sys + self.grid.qubits_t
