import logging
from typing import Optional

from fastapi import APIRouter, HTTPException, Request

from dfs.errors import (
    AnalysisRefusedError,
    ClosureCapError,
    DegenerateDrawError,
    DenseLimitError,
    DfsError,
)
from dfs.report import analysis
from models.report import (
    AnalysisReport,
    AnalyzeRequest,
    ChannelRequest,
    DimensionRequest,
    DimensionResult,
    ScanResult,
)

analysis_rp = APIRouter()

logger = logging.getLogger("dfs.api")


def _fail(request: Request, e: Exception) -> HTTPException:
    reqlog = getattr(request.state, "reqlog", None)
    if reqlog is not None:
        reqlog["error"] = type(e).__name__
    if isinstance(e, AnalysisRefusedError):
        status = 422
    elif isinstance(e, (DegenerateDrawError, ArithmeticError)):
        status = 500
    else:
        status = 400
    logger.warning(f"[API] {request.url.path} -> {status}: {e}")
    return HTTPException(status_code=status, detail=str(e))


_HANDLED = (ValueError, DenseLimitError, ClosureCapError, DfsError, ArithmeticError)


# =====================================================================================
#                              ANALYSIS AND PRESETS
# =====================================================================================

@analysis_rp.post("/analyze", response_model=AnalysisReport, response_model_exclude_none=True)
def analyze(item: AnalyzeRequest, request: Request):
    try:
        return analysis.cmd_analyze(
            item.generators,
            dense_limit=item.dense_limit,
            trials=item.trials,
            seed=item.seed,
            require_dfs=item.require_dfs,
        )
    except _HANDLED as e:
        raise _fail(request, e)


@analysis_rp.get("/preset/{name}", response_model=AnalysisReport, response_model_exclude_none=True)
def preset(name: str, request: Request, trials: Optional[int] = None, seed: Optional[int] = None):
    try:
        return analysis.cmd_preset(name, trials=trials, seed=seed)
    except _HANDLED as e:
        raise _fail(request, e)


# =====================================================================================
#                              CHANNELS AND DIMENSION
# =====================================================================================

@analysis_rp.post("/channel", response_model=ScanResult, response_model_exclude_none=True)
def channel(item: ChannelRequest, request: Request):
    try:
        return analysis.cmd_channel(
            item.generators,
            item.state,
            trials=item.trials,
            seed=item.seed,
            n_ops=item.n_ops,
            preset=item.preset,
        )
    except _HANDLED as e:
        raise _fail(request, e)


@analysis_rp.post("/dimension", response_model=DimensionResult)
def dimension(item: DimensionRequest, request: Request):
    try:
        return analysis.cmd_dimension(item.n_qubits, item.order, item.phase_class)
    except _HANDLED as e:
        raise _fail(request, e)
