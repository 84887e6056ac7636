"""HTTP front end exposing the four experiments.

Run with:  uvicorn qlaplace.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import (
    DegenerateSignalError,
    ParameterError,
    QLaplaceError,
    ResourceLimitError,
    UnsupportedOracleError,
)
from .models import (
    CompareRequest,
    CompareResponse,
    ConvergeRequest,
    ConvergeResponse,
    GatecountRequest,
    GatecountResponse,
    TransformRequest,
    TransformResponse,
)
from .runners import run_compare, run_converge, run_gatecount, run_transform

_STATUS = (
    (ResourceLimitError, 413),
    (DegenerateSignalError, 422),
    (UnsupportedOracleError, 422),
    (ParameterError, 400),
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="qlaplace",
        description="Discrete Laplace transform on arithmetic-progression s grids, "
        "simulated on a dense statevector engine with classical quadrature references.",
        version="0.1.0",
    )

    @app.exception_handler(QLaplaceError)
    async def _domain_error(request: Request, exc: QLaplaceError) -> JSONResponse:
        status = next((code for cls, code in _STATUS if isinstance(exc, cls)), 400)
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "message": str(exc)},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/transform", response_model=TransformResponse)
    def transform(request: TransformRequest) -> TransformResponse:
        return run_transform(request)

    @app.post("/compare", response_model=CompareResponse)
    def compare(request: CompareRequest) -> CompareResponse:
        return run_compare(request)

    @app.post("/converge", response_model=ConvergeResponse)
    def converge(request: ConvergeRequest) -> ConvergeResponse:
        return run_converge(request)

    @app.post("/gatecount", response_model=GatecountResponse)
    def gatecount(request: GatecountRequest) -> GatecountResponse:
        return run_gatecount(request)

    return app


app = create_app()
