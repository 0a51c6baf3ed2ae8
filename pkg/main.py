import logging

from fastapi import FastAPI

from config import settings
from dfs.api.analysis import analysis_rp
from dfs.middleware.log import RequestLogMiddleware

logging.basicConfig(level=settings.LOG_LEVEL)

app = FastAPI(title="dfs")

app.add_middleware(RequestLogMiddleware)
app.include_router(analysis_rp, prefix="", tags=["analysis"])


@app.get("/")
def index():
    return {"status": "ok", "message": "DFS analysis service ready"}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run("main:app", host="0.0.0.0", port=8000, reload=True)
