"""
Server module for webvac

This module provides functionality to start and configure the FastAPI server
that serves the webvac API.
"""

import logging
import os
import sys
import traceback

import uvicorn
from fastapi import FastAPI, HTTPException, Request
from fastapi.openapi.utils import get_openapi
from fastapi.responses import JSONResponse

from webvac import __version__
from webvac.api.v1.endpoints import matchings, tableaux, verification, webs
from webvac.core.config import API_HOST_ENV, API_PORT_ENV, get_api_base_url, get_enumeration_budget
from webvac.core.errors import InputError, WebvacError
from webvac.models.common import APIInfo, ErrorResponse

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=[
        logging.StreamHandler(sys.stdout),
    ],
)
logger = logging.getLogger("webvac")


def _error(request: Request, status_code: int, detail: str, error_type: str) -> JSONResponse:
    error = ErrorResponse(
        status_code=status_code,
        detail=detail,
        error_type=error_type,
        path=request.url.path,
    )
    return JSONResponse(status_code=status_code, content=error.model_dump())


def create_app() -> FastAPI:
    """
    Create and configure the FastAPI application instance.

    Returns:
        FastAPI: Configured FastAPI application
    """
    app = FastAPI(
        title="webvac API",
        version=__version__,
        description="""
        RESTful API for evacuation of rectangular standard Young tableaux and
        the sl_n web graphs built from them.

        Tableaux are posted as JSON grids of rows. Matchings and webs are
        posted and returned in the JSON form of their models, so the output of
        one endpoint can be fed to the next.
        """,
    )

    # Include the routers
    app.include_router(tableaux.router, prefix="/v1/tableaux", tags=["tableaux"])
    app.include_router(matchings.router, prefix="/v1/matchings", tags=["matchings"])
    app.include_router(webs.router, prefix="/v1/webs", tags=["webs"])
    app.include_router(verification.router, prefix="/v1/verify", tags=["verification"])

    # Root endpoint
    @app.get("/", response_model=APIInfo, tags=["root"],
             summary="API information",
             description="Returns basic information about the API and available endpoints.")
    async def root():
        """
        Return basic information about the API and available endpoints.

        Links are built from WEBVAC_API_HOST and WEBVAC_API_PORT, which
        start_server sets.
        """
        logger.debug("Root endpoint called")
        base = get_api_base_url()

        return APIInfo(
            name="webvac API",
            version=__version__,
            description="Evacuation, matchings and webs of rectangular tableaux",
            documentation=f"{base}/docs",
            endpoints={
                "tableaux_validate": f"{base}/v1/tableaux/validate",
                "tableaux_evacuate": f"{base}/v1/tableaux/evacuate",
                "tableaux_promote": f"{base}/v1/tableaux/promote",
                "tableaux_count": f"{base}/v1/tableaux/count",
                "tableaux_enumerate": f"{base}/v1/tableaux/enumerate",
                "matchings": f"{base}/v1/matchings/from-tableau",
                "webs": f"{base}/v1/webs/from-tableau",
                "render": f"{base}/v1/webs/render",
                "verify": f"{base}/v1/verify",
            },
        )

    # Health check endpoint
    @app.get("/health", tags=["system"],
             summary="API health check",
             description="Check if the API is operational and report the enumeration budget.")
    async def health_check():
        """Report liveness and the enumeration budget in effect."""
        return {"status": "healthy", "version": __version__, "budget": get_enumeration_budget()}

    # Domain errors: bad input is the caller's fault, anything else is ours
    @app.exception_handler(InputError)
    async def input_error_handler(request: Request, exc: InputError):
        logger.warning(f"Rejected input on {request.url.path}: {exc}")
        return _error(request, 400, str(exc), "input_error")

    @app.exception_handler(WebvacError)
    async def webvac_error_handler(request: Request, exc: WebvacError):
        logger.error(f"Internal check failed on {request.url.path}: {exc}")
        return _error(request, 500, str(exc), "internal_check_error")

    # Custom exception handler for consistent error responses
    @app.exception_handler(HTTPException)
    async def http_exception_handler(request: Request, exc: HTTPException):
        """
        Custom exception handler for HTTPExceptions.

        Transforms HTTPExceptions into a consistent error response format.
        """
        return _error(request, exc.status_code, str(exc.detail), "http_error")

    # Exception handler for unexpected errors
    @app.exception_handler(Exception)
    async def generic_exception_handler(request: Request, exc: Exception):
        """
        Generic exception handler for unexpected errors.

        Catches any unhandled exceptions and returns a formatted error response.
        """
        logger.error(f"Unhandled exception: {str(exc)}")
        logger.error(traceback.format_exc())
        return _error(request, 500, f"Internal server error: {str(exc)}", "server_error")

    def custom_openapi():
        """Generate the OpenAPI schema once, with license information attached."""
        if app.openapi_schema:
            return app.openapi_schema

        openapi_schema = get_openapi(
            title=app.title,
            version=app.version,
            description=app.description,
            routes=app.routes,
        )
        openapi_schema["info"]["license"] = {
            "name": "Apache License 2.0",
            "url": "https://www.apache.org/licenses/LICENSE-2.0",
        }

        app.openapi_schema = openapi_schema
        return app.openapi_schema

    app.openapi = custom_openapi  # type: ignore[method-assign]

    return app


def start_server(host: str = "0.0.0.0", port: int = 8000, log_level: str = "info", reload: bool = False):
    """
    Start the FastAPI server using Uvicorn.

    Args:
        host: The host to bind the server to
        port: The port to bind the server to
        log_level: The log level to use
        reload: Whether to enable auto-reload
    """
    logger.info(f"Starting webvac API server on {host}:{port} with log level {log_level}")

    # Set environment variables for the API to use
    os.environ[API_PORT_ENV] = str(port)
    os.environ[API_HOST_ENV] = host

    try:
        uvicorn.run(
            "webvac.server:app",
            host=host,
            port=port,
            log_level=log_level,
            reload=reload,
        )
    except Exception as e:
        logger.error(f"Failed to start server: {str(e)}")
        raise


# Create the app instance
app = create_app()

__all__ = ["app", "create_app", "start_server"]
