import logging
import time

from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware

logger = logging.getLogger("dfs.reqlog")


class RequestLogMiddleware(BaseHTTPMiddleware):
    """One summary line per request: route, status, duration and any error.

    Routers may add keys to ``request.state.reqlog``; they are logged with the
    summary.
    """

    async def dispatch(self, request: Request, call_next):
        start_time = time.time()
        response = None

        logger.debug(f"[REQLOG] start {request.method} {request.url.path}")

        request.state.reqlog = {
            "status": "SUCCESS",
            "error": None,
        }

        try:
            response = await call_next(request)
            if response.status_code >= 400:
                request.state.reqlog["status"] = "ERROR"
        except Exception as e:
            logger.exception("[REQLOG] unhandled error in route")
            request.state.reqlog["status"] = "ERROR"
            request.state.reqlog["error"] = str(e)
            raise
        finally:
            duration = int((time.time() - start_time) * 1000)
            data = getattr(request.state, "reqlog", {})
            code = response.status_code if response is not None else 500
            logger.info(
                f"[REQLOG] {request.method} {request.url.path} -> {code} "
                f"status={data.get('status')} error={data.get('error')} ms={duration}"
            )

        return response
