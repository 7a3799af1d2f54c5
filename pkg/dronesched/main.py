"""
Drone Scheduling API

This module defines a FastAPI application exposing the drone schedulers, the interval generator and the oracles.
"""

from contextlib import asynccontextmanager

import sentry_sdk
from fastapi import APIRouter, FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from loguru import logger as L
from sentry_sdk.integrations.asgi import SentryAsgiMiddleware

from dronesched.core.api import SchedulingError
from dronesched.router import health, intervals, oracle, ovds, schedule
from dronesched.settings import settings

tags_metadata = [
    {
        "name": "Health",
        "description": "Endpoints related to checking the health of the application",
    },
    {
        "name": "Schedule",
        "description": "Endpoints running the online scheduler (next-fit or first-fit) over a request stream",
    },
    {
        "name": "OVDS",
        "description": "Endpoints serving known requests with drones of varying capacity",
    },
    {
        "name": "Intervals",
        "description": "Endpoints turning customer requests along a truck route into delivery intervals",
    },
    {
        "name": "Oracle",
        "description": "Endpoints computing offline reference values",
    },
]


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    Lifespan events set the events that will be executed at the startup (before yield)
    and the shutdown (after yield) of the application
    """
    # pylint: disable=unused-argument
    # pylint: disable=redefined-outer-name
    if settings.sentry_dsn:
        sentry_sdk.init(
            dsn=settings.sentry_dsn,
            traces_sample_rate=settings.sentry_traces_sample_rate,
            profiles_sample_rate=settings.sentry_profiles_sample_rate,
            environment=settings.environment,
        )
    yield


app = FastAPI(
    title="Drone Scheduling API",
    debug=settings.debug_mode,
    lifespan=lifespan,
    version="0.1.0",
    openapi_tags=tags_metadata,
    docs_url=f"{settings.base_path}/docs",
    openapi_url=f"{settings.base_path}/openapi.json",
)


base_router = APIRouter(prefix=settings.base_path)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.whitelisted_cors_urls or [],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(SchedulingError)
async def scheduling_error_handler(request: Request, exc: SchedulingError):
    L.info(f"{request.method} {request.url.path}: {exc}")
    return JSONResponse(
        status_code=exc.http_status_code,
        content={
            "message": exc.message,
            "code": exc.error_code,
            "details": exc.details,
        },
    )


# ASGI middleware to capture incoming HTTP request
app.add_middleware(SentryAsgiMiddleware)

# Include routers
base_router.include_router(schedule.router, prefix="/schedule", tags=["Schedule"])
base_router.include_router(ovds.router, prefix="/ovds", tags=["OVDS"])
base_router.include_router(intervals.router, prefix="/intervals", tags=["Intervals"])
base_router.include_router(oracle.router, prefix="/oracle", tags=["Oracle"])
base_router.include_router(health.router, tags=["Health"])

app.include_router(base_router)
