"""Request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..core.apspec import APSpec
from ..core.grid import DEFAULT_BETA, DEFAULT_K_MAX, DEFAULT_T_MAX, LaplaceGrid, build_grid
from ..core.signal import SignalFunction, exp_decay, exp_decay_sine, tabulated
from ..qlt.config import QltConfig

DEFAULT_SCHEDULE = [4, 8, 16, 32, 64, 128, 256]


class ApModel(BaseModel):
    first_real: float = 1.0
    diff_real: float = 1.0
    first_imag: float = 1.0
    diff_imag: float = 1.0
    n_sys: int = Field(default=1, ge=1)

    def to_domain(self) -> APSpec:
        return APSpec(self.first_real, self.diff_real, self.first_imag, self.diff_imag, self.n_sys)


class GridModel(BaseModel):
    k_max: float = DEFAULT_K_MAX
    m_k: int = 2
    t_max: float = DEFAULT_T_MAX
    m_t: int = 2
    beta: float = DEFAULT_BETA

    def to_domain(self) -> LaplaceGrid:
        return build_grid(self.k_max, self.m_k, self.t_max, self.m_t, self.beta)


class SignalModel(BaseModel):
    kind: Literal["exp_decay", "exp_decay_sine", "tabulated"] = "exp_decay"
    rate: float = 0.9
    frequency: float = 1.0
    samples: Optional[list[float]] = None

    @model_validator(mode="after")
    def _check_samples(self):
        if self.kind == "tabulated" and not self.samples:
            raise ValueError("tabulated signals require a samples list")
        return self

    def to_domain(self) -> SignalFunction:
        if self.kind == "exp_decay":
            return exp_decay(self.rate)
        if self.kind == "exp_decay_sine":
            return exp_decay_sine(self.rate, self.frequency)
        return tabulated(self.samples or ())


class RunModel(BaseModel):
    """Execution knobs that are not part of the mathematical problem."""

    variant: Literal["full", "reduced"] = "full"
    seed: int = 0
    out: Optional[str] = None
    format: Literal["csv", "json"] = "csv"


class RunConfigModel(BaseModel):
    """One parsed configuration file: the four sections."""

    ap: ApModel = ApModel()
    grid: GridModel = GridModel()
    signal: SignalModel = SignalModel()
    run: RunModel = RunModel()

    def to_qlt_config(self) -> QltConfig:
        return QltConfig(
            ap=self.ap.to_domain(),
            grid=self.grid.to_domain(),
            signal=self.signal.to_domain(),
            select_variant=self.run.variant,
        )


class TransformRequest(BaseModel):
    ap: ApModel = ApModel()
    grid: GridModel = GridModel()
    signal: SignalModel = SignalModel()
    variant: Literal["full", "reduced"] = "full"
    seed: int = 0

    def to_qlt_config(self) -> QltConfig:
        return QltConfig(
            ap=self.ap.to_domain(),
            grid=self.grid.to_domain(),
            signal=self.signal.to_domain(),
            select_variant=self.variant,
        )


class TransformRow(BaseModel):
    s_real: float
    s_imag: float
    value_real: float
    value_imag: float
    raw_real: float
    raw_imag: float
    rescale_factor: float


class TransformResponse(BaseModel):
    rows: list[TransformRow]
    rescale_factor: float
    success_weight: float
    total_qubits: int


class CompareRequest(TransformRequest):
    pass


class CompareRow(BaseModel):
    s_real: float
    s_imag: float
    circuit_real: float
    circuit_imag: float
    classical_real: float
    classical_imag: float
    analytic_real: Optional[float] = None
    analytic_imag: Optional[float] = None
    abs_diff: float
    max_abs_diff: float


class CompareResponse(BaseModel):
    max_abs_diff: float
    rows: list[CompareRow]


class ConvergeRequest(BaseModel):
    ap: ApModel = ApModel()
    signal: SignalModel = SignalModel()
    k_max: float = DEFAULT_K_MAX
    t_max: float = DEFAULT_T_MAX
    beta: float = DEFAULT_BETA
    schedule: list[int] = Field(default_factory=lambda: list(DEFAULT_SCHEDULE))
    seed: int = 0


class ConvergeRow(BaseModel):
    log2_mk: int
    total_abs_error: float


class ConvergeResponse(BaseModel):
    rows: list[ConvergeRow]


class GatecountRequest(BaseModel):
    m_max: int = Field(default=6, ge=1)
    seed: int = 0


class GatecountRow(BaseModel):
    m: int
    full_count: int
    reduced_count: int
    predicted_full: int
    ratio_full_over_m3: float


class GatecountResponse(BaseModel):
    rows: list[GatecountRow]
