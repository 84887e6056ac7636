"""Experiment runners: pure functions from request models to response models.

Both the HTTP endpoints and the CLI subcommands call these; domain errors
propagate as qlaplace exceptions for the caller to map onto status or exit
codes.
"""

from __future__ import annotations

from ..core.apspec import APSpec
from ..core.coefficients import compute_coefficients, lchs_discrete_sum
from ..core.grid import LaplaceGrid, build_grid
from ..core.signal import TABULATED, analytic_laplace
from ..errors import ParameterError, UnsupportedOracleError
from ..qlt.config import QltConfig, VARIANT_FULL, VARIANT_REDUCED
from ..qlt.run import run_qlt, verify_against_classical
from ..qlt.select import build_select, predicted_gate_count
from ..core.signal import exp_decay
from .models import (
    CompareRequest,
    CompareResponse,
    CompareRow,
    ConvergeRequest,
    ConvergeResponse,
    ConvergeRow,
    GatecountRequest,
    GatecountResponse,
    GatecountRow,
    TransformRequest,
    TransformResponse,
    TransformRow,
)

GATECOUNT_M_LIMIT = 6


def _reject_scalar_registers(config: QltConfig) -> None:
    # m = 1 collapses an index register to zero qubits; fine for the
    # classical reference and for tests, but not a meaningful circuit run
    if config.grid.m_k < 2 or config.grid.m_t < 2:
        raise ParameterError("circuit runs need m_k >= 2 and m_t >= 2")


def run_transform(request: TransformRequest) -> TransformResponse:
    config = request.to_qlt_config()
    _reject_scalar_registers(config)
    result = run_qlt(config)
    rows = [
        TransformRow(
            s_real=s.real,
            s_imag=s.imag,
            value_real=v.real,
            value_imag=v.imag,
            raw_real=r.real,
            raw_imag=r.imag,
            rescale_factor=result.rescale_factor,
        )
        for s, v, r in zip(result.s_nodes, result.values, result.raw_amplitudes)
    ]
    return TransformResponse(
        rows=rows,
        rescale_factor=result.rescale_factor,
        success_weight=result.success_weight,
        total_qubits=config.n_total,
    )


def run_compare(request: CompareRequest) -> CompareResponse:
    config = request.to_qlt_config()
    _reject_scalar_registers(config)
    report = verify_against_classical(config)
    signal = config.signal
    rows = []
    for s, circ, cls, diff in zip(
        report.s_nodes, report.circuit_values, report.classical_values, report.per_s_diffs
    ):
        if signal.kind == TABULATED:
            an_re = an_im = None
        else:
            an = analytic_laplace(signal, s)
            an_re, an_im = an.real, an.imag
        rows.append(
            CompareRow(
                s_real=s.real,
                s_imag=s.imag,
                circuit_real=circ.real,
                circuit_imag=circ.imag,
                classical_real=cls.real,
                classical_imag=cls.imag,
                analytic_real=an_re,
                analytic_imag=an_im,
                abs_diff=float(diff),
                max_abs_diff=report.max_abs_diff,
            )
        )
    return CompareResponse(max_abs_diff=report.max_abs_diff, rows=rows)


def _validate_schedule(schedule: list[int]) -> None:
    if not schedule:
        raise ParameterError("schedule must not be empty")
    for m in schedule:
        if m < 2 or m & (m - 1):
            raise ParameterError(f"schedule entries must be powers of two >= 2, got {m}")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ParameterError("schedule must be strictly increasing")


def run_converge(request: ConvergeRequest) -> ConvergeResponse:
    """Classical quadrature error against the closed form, per schedule entry.

    For each m the grid uses m_k = m_t = m, and the reported figure is the
    sum over the configured s nodes of |double-loop sum - closed form|.
    """
    signal = request.signal.to_domain()
    if signal.kind == TABULATED:
        raise UnsupportedOracleError("convergence needs a closed-form transform; tabulated signals have none")
    _validate_schedule(request.schedule)
    ap = request.ap.to_domain()
    s_nodes = ap.s_nodes()
    rows = []
    for m in request.schedule:
        grid = build_grid(request.k_max, m, request.t_max, m, request.beta)
        coeffs = compute_coefficients(grid, signal)
        total = 0.0
        for s in s_nodes:
            total += abs(lchs_discrete_sum(coeffs, grid, s) - analytic_laplace(signal, s))
        rows.append(ConvergeRow(log2_mk=m.bit_length() - 1, total_abs_error=total))
    return ConvergeResponse(rows=rows)


def run_gatecount(request: GatecountRequest) -> GatecountResponse:
    """SELECT sizes for the square family d = d' = n_sys = m, m = 1 .. m_max.

    full_count comes from counting the constructed circuit, never from the
    formula; predicted_full is the formula m*m*(2 + 3m) so the two can be
    checked against each other. The cubic ratio full_count / m**3 is the
    desk-scale handle on the (log N)**3 scaling claim.
    """
    if request.m_max > GATECOUNT_M_LIMIT:
        raise ParameterError(f"m_max is capped at {GATECOUNT_M_LIMIT}, got {request.m_max}")
    rows = []
    for m in range(1, request.m_max + 1):
        ap = APSpec(1.0, 1.0, 1.0, 1.0, n_sys=m)
        grid = build_grid(8.0, 2**m, 3.0, 2**m, 0.8)
        signal = exp_decay(0.9)
        full = QltConfig(ap, grid, signal, select_variant=VARIANT_FULL)
        reduced = QltConfig(ap, grid, signal, select_variant=VARIANT_REDUCED)
        full_count = len(build_select(full).gates)
        rows.append(
            GatecountRow(
                m=m,
                full_count=full_count,
                reduced_count=len(build_select(reduced).gates),
                predicted_full=predicted_gate_count(full),
                ratio_full_over_m3=full_count / m**3,
            )
        )
    return GatecountResponse(rows=rows)
