from datetime import datetime

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
import uvicorn

from ..config import settings
from ..errors import BranchCoverError
from ..routes import fibrations
from ..utils.logging import logger

app = FastAPI(
    title="Branchcover",
    description="Hyperelliptic Lefschetz fibrations as double branched covers",
    version=settings.API_VERSION
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(fibrations.router)


def _error_response(status_code: int, detail: str, error_code: str) -> JSONResponse:
    return JSONResponse(
        status_code=status_code,
        content={
            "detail": detail,
            "error_code": error_code,
            "timestamp": str(datetime.now())
        }
    )


@app.exception_handler(HTTPException)
async def http_exception_handler(request, exc):
    return _error_response(exc.status_code, exc.detail, f"{exc.status_code}_ERROR")


@app.exception_handler(BranchCoverError)
async def branchcover_exception_handler(request, exc):
    logger.error(f"{type(exc).__name__} on {request.url.path}: {exc.message}")
    return _error_response(exc.status_code, exc.message, exc.error_code)


@app.exception_handler(Exception)
async def general_exception_handler(request, exc):
    logger.exception(f"Unhandled exception on {request.url.path}")
    return _error_response(500, "An unexpected error occurred", "500_INTERNAL_ERROR")


@app.get("/health")
async def health_check():
    return {
        "status": "healthy",
        "version": settings.API_VERSION,
        "schema": settings.SCHEMA_VERSION,
        "max_strands": settings.MAX_STRANDS,
        "max_word_length": settings.MAX_WORD_LENGTH
    }


if __name__ == "__main__":
    uvicorn.run("branchcover.app.main:app", host=settings.API_HOST, port=settings.API_PORT)
