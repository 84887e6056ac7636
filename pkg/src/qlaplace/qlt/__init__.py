"""Circuit assembly: weight preparation, SELECT compilation, execution."""

from .config import VARIANT_FULL, VARIANT_REDUCED, VARIANTS, QltConfig
from .prep import prep_complex_weights, prep_real_weights, principal_sqrt
from .run import (
    ComparisonReport,
    QltCircuit,
    QltResult,
    build_qlt,
    combined_circuit,
    run_qlt,
    verify_against_classical,
)
from .select import build_select, predicted_gate_count

__all__ = [
    "ComparisonReport",
    "QltCircuit",
    "QltConfig",
    "QltResult",
    "VARIANTS",
    "VARIANT_FULL",
    "VARIANT_REDUCED",
    "build_qlt",
    "build_select",
    "combined_circuit",
    "predicted_gate_count",
    "prep_complex_weights",
    "prep_real_weights",
    "principal_sqrt",
    "run_qlt",
    "verify_against_classical",
]
