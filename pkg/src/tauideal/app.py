"""HTTP face of the service handlers.

All endpoints are POST with JSON bodies mirroring the CLI commands;
input problems surface as 422 with a plain error message.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__, service
from .models import (
    AugmentRequest,
    AugmentResponse,
    CexRequest,
    CexResponse,
    ChartRequest,
    ChartResponse,
    ComputeRequest,
    ComputeResponse,
    Dim2Request,
    HealthResponse,
    RestrictRequest,
    RestrictResponse,
    ScanRequest,
    ScanResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(title="tauideal", version=__version__)

    @app.exception_handler(service.ServiceError)
    async def _service_error(_: Request, exc: service.ServiceError):
        return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.get("/v1/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(version=__version__)

    @app.post("/v1/compute", response_model=ComputeResponse)
    def compute(req: ComputeRequest) -> ComputeResponse:
        return service.compute(req)

    @app.post("/v1/augment", response_model=AugmentResponse)
    def augment(req: AugmentRequest) -> AugmentResponse:
        return service.augment(req)

    @app.post("/v1/restrict", response_model=RestrictResponse)
    def restrict(req: RestrictRequest) -> RestrictResponse:
        return service.restrict(req)

    @app.post("/v1/scan", response_model=ScanResponse)
    def scan(req: ScanRequest) -> ScanResponse:
        return service.scan(req)

    @app.post("/v1/cex", response_model=CexResponse)
    def cex(req: CexRequest) -> CexResponse:
        return service.cex(req)

    @app.post("/v1/chart", response_model=ChartResponse)
    def chart(req: ChartRequest) -> ChartResponse:
        return service.chart(req)

    @app.post("/v1/dim2", response_model=ScanResponse)
    def dim2(req: Dim2Request) -> ScanResponse:
        return service.dim2(req)

    return app
