from fastapi import FastAPI, Request
from fastapi.responses import PlainTextResponse

from src.exceptions import RigidityError
from src.logs.logger import get_logger
from src.logs.middleware import LogRequestMiddleware

from src.core.router import router as core_router
from src.construct.router import router as construct_router
from src.fraenkel.router import router as fraenkel_router
from src.census.router import router as census_router

logger = get_logger("api")

app = FastAPI(
    title="Rigid Relations",
    description="Rigidity, strong rigidity and hereditary rigidity of finite binary relations",
    version="0.1.0",
)

app.add_middleware(LogRequestMiddleware)


@app.exception_handler(RigidityError)
async def rigidity_exception_handler(request: Request, exc: RigidityError):
    logger.info(f"{request.method} {request.url.path} -> {type(exc).__name__}: {exc}")
    return PlainTextResponse(f"{type(exc).__name__}: {exc}", status_code=exc.status_code)


app.include_router(
    router=core_router,
    prefix="/core",
    tags=["Core"],
)

app.include_router(
    router=construct_router,
    prefix="/construct",
    tags=["Construct"],
)

app.include_router(
    router=fraenkel_router,
    prefix="/fraenkel",
    tags=["Fraenkel"],
)

app.include_router(
    router=census_router,
    prefix="/census",
    tags=["Census"],
)
