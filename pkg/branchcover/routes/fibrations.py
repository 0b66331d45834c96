from fastapi import APIRouter, HTTPException, Query
from typing import Any, Dict, Optional

from ..errors import BranchCoverError
from ..pipeline import CoverPipeline
from ..schemas.cover import (
    CertificateResponse,
    CoverDescriptionResponse,
    FibrationRequest,
    HandleComplexResponse,
    RewriteRequest,
    RewriteResponse,
)
from ..utils.cache import cache_result
from ..utils.logging import logger

router = APIRouter(prefix="/fibrations", tags=["fibrations"])
pipeline = CoverPipeline()


def _http_error(e: BranchCoverError) -> HTTPException:
    logger.error(f"{type(e).__name__}: {e.message}")
    return HTTPException(status_code=e.status_code, detail=e.message)


@router.post(
    "/check",
    response_model=CertificateResponse,
    responses={
        422: {"description": "Source text does not parse or does not fit its genus"},
        500: {"description": "Internal server error"}
    }
)
@cache_result(prefix="fib:check")
async def check_fibration(request: FibrationRequest) -> Dict[str, Any]:
    """Certify that the global monodromy of a fibration is the identity upstairs."""
    try:
        _, _, response = pipeline.check(request.source)
        return response.dict()
    except BranchCoverError as e:
        raise _http_error(e)


@router.post(
    "/compile",
    response_model=CoverDescriptionResponse,
    responses={
        409: {"description": "Global monodromy is not the identity"},
        422: {"description": "Invalid source or word of the wrong length"},
        500: {"description": "Internal server error"}
    }
)
@cache_result(prefix="fib:compile")
async def compile_fibration(request: FibrationRequest) -> Dict[str, Any]:
    """Describe a fibration over the sphere as a double branched cover."""
    try:
        report = pipeline.compile(request.source)
        if report.description is None:
            raise HTTPException(status_code=422, detail="compile needs a fibration over the sphere")
        return report.description.dict(by_alias=True)
    except BranchCoverError as e:
        raise _http_error(e)


@router.post(
    "/rewrite",
    response_model=RewriteResponse,
    responses={
        422: {"description": "Invalid source, or the rewrite does not apply"},
        500: {"description": "Internal server error"}
    }
)
async def rewrite_fibration(request: RewriteRequest) -> Dict[str, Any]:
    """Deform a separating cycle into its chain block, or resolve a chain block."""
    if (request.deform is None) == (request.resolve is None):
        raise HTTPException(status_code=422, detail="give exactly one of deform and resolve")
    if request.resolve is not None and len(request.resolve) != 2:
        raise HTTPException(status_code=422, detail="resolve takes [start, stop]")
    try:
        _, response = pipeline.rewrite(request.source, deform=request.deform, resolve=request.resolve)
        return response.dict()
    except BranchCoverError as e:
        raise _http_error(e)


@router.get(
    "/handles/{h}",
    response_model=HandleComplexResponse,
    responses={
        422: {"description": "Invalid genus"},
        500: {"description": "Internal server error"}
    }
)
@cache_result(prefix="fib:handles")
async def get_handles(
    h: int,
    g: Optional[int] = Query(None, ge=1),
    simplify: bool = False
) -> Dict[str, Any]:
    """Handle list of Σ_h×D², or of the extended separating model when g is given."""
    try:
        return pipeline.handles(h, g, simplify).dict()
    except BranchCoverError as e:
        raise _http_error(e)
