import time
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request

from app.config.config import settings
from app.config.logging import logger
from app.routes import graph_routes, labeling_routes, magic_routes, solver_routes


@asynccontextmanager
async def lifespan(_: FastAPI):
    """Handle application lifespan events"""
    logger.info("application_started", app=settings.APP_NAME, environment=settings.ENVIRONMENT)
    yield
    logger.info("application_shutdown", app=settings.APP_NAME)


app = FastAPI(
    title=settings.APP_NAME,
    description="Construct, verify and compute local antimagic labelings of graphs",
    version="0.1.0",
    lifespan=lifespan,
    docs_url="/docs" if settings.ENVIRONMENT == "development" else None,
    redoc_url="/redoc" if settings.ENVIRONMENT == "development" else None,
    debug=settings.DEBUG,
)


@app.middleware("http")
async def log_requests(request: Request, call_next):
    """Log every request with its status and duration."""
    start_time = time.time()
    logger.info(
        "request_started",
        method=request.method,
        path=request.url.path,
        client_ip=request.client.host if request.client else None,
    )
    try:
        response = await call_next(request)
    except Exception as e:
        logger.error(
            "request_failed",
            method=request.method,
            path=request.url.path,
            error=str(e),
            process_time=round(time.time() - start_time, 3),
            exc_info=True,
        )
        raise

    logger.info(
        "request_completed",
        method=request.method,
        path=request.url.path,
        status_code=response.status_code,
        process_time=round(time.time() - start_time, 3),
    )
    return response


@app.get("/", tags=["Root"])
async def root():
    """
    Root endpoint to verify API status.

    Returns:
        dict: A welcome message, link to docs, and status.
    """
    logger.debug("root_endpoint_accessed")
    return {
        "message": f"Welcome to {settings.APP_NAME}",
        "docs": "/docs" if settings.ENVIRONMENT == "development" else None,
        "status": "active",
    }


@app.get("/api/v1/health", tags=["Root"])
async def health_check():
    """Health check endpoint."""
    logger.debug("health_check_accessed")
    return {"status": "healthy"}


app.include_router(graph_routes.router)
app.include_router(labeling_routes.router)
app.include_router(magic_routes.router)
app.include_router(solver_routes.router)
