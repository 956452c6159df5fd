"""
UlrichForge - HTTP Server
FastAPI application exposing the engine commands under /api.
"""
import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from config import settings
from routers.cohomology import router as cohomology_router
from routers.moduli import router as moduli_router
from routers.scroll import router as scroll_router
from routers.verify import router as verify_router
from services import cohomology, cox
from utils.errors import ConfigError, InternalConsistencyError, SurfaceMismatchError, UnsupportedError
from utils.logs import configure_logging

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Startup and shutdown events."""
    configure_logging()
    logger.info("[SERVER] engine ready")
    yield
    cohomology.cache_clear()
    cox.cache_clear()
    logger.info("[SERVER] shutting down")


app = FastAPI(
    title="UlrichForge",
    description="Exact verification of Ulrich bundles on Hirzebruch surfaces and their 3-fold scrolls",
    version="1.0.0",
    lifespan=lifespan,
    docs_url="/docs",
    redoc_url="/redoc",
    openapi_url="/openapi.json",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


def _error(status: int, exc: Exception, **extra) -> JSONResponse:
    return JSONResponse(status_code=status, content={"detail": str(exc), **extra})


@app.exception_handler(ConfigError)
async def config_error(request: Request, exc: ConfigError):
    return _error(422, exc, inequality=exc.inequality)


@app.exception_handler(UnsupportedError)
async def unsupported_error(request: Request, exc: UnsupportedError):
    return _error(422, exc, unsupported=True)


@app.exception_handler(SurfaceMismatchError)
async def mismatch_error(request: Request, exc: SurfaceMismatchError):
    return _error(422, exc)


@app.exception_handler(ValueError)
async def value_error(request: Request, exc: ValueError):
    return _error(422, exc)


@app.exception_handler(InternalConsistencyError)
async def internal_error(request: Request, exc: InternalConsistencyError):
    logger.error("[SERVER] internal consistency failure: %s", exc)
    return _error(500, exc)


app.include_router(cohomology_router)
app.include_router(verify_router)
app.include_router(moduli_router)
app.include_router(scroll_router)


@app.get("/")
async def root():
    return {
        "name": "UlrichForge",
        "version": "1.0.0",
        "status": "running",
        "docs": "/docs",
    }


@app.get("/api/health")
async def health():
    return {"status": "healthy", "service": "ulrichforge"}


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "main:app",
        host=settings.SERVER_HOST,
        port=settings.SERVER_PORT,
        log_level=settings.LOG_LEVEL.lower(),
    )
