"""FastAPI service wrapping the core package; the CLI shares its runners."""

from .app import app, create_app
from .models import (
    ApModel,
    CompareRequest,
    CompareResponse,
    ConvergeRequest,
    ConvergeResponse,
    GatecountRequest,
    GatecountResponse,
    GridModel,
    RunConfigModel,
    RunModel,
    SignalModel,
    TransformRequest,
    TransformResponse,
)
from .runners import run_compare, run_converge, run_gatecount, run_transform

__all__ = [
    "ApModel",
    "CompareRequest",
    "CompareResponse",
    "ConvergeRequest",
    "ConvergeResponse",
    "GatecountRequest",
    "GatecountResponse",
    "GridModel",
    "RunConfigModel",
    "RunModel",
    "SignalModel",
    "TransformRequest",
    "TransformResponse",
    "app",
    "create_app",
    "run_compare",
    "run_converge",
    "run_gatecount",
    "run_transform",
]
