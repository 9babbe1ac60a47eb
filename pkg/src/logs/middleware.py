import re

from starlette.middleware.base import BaseHTTPMiddleware
from starlette.requests import Request

from src.logs.logger import get_logger
from src.utils.ip import get_real_ip

logger = get_logger("requests")

SKIP = re.compile(r"/(docs|redoc|openapi\.json|favicon)")


class LogRequestMiddleware(BaseHTTPMiddleware):
    async def dispatch(self, request: Request, call_next):
        path = request.url.path
        if SKIP.match(path):
            return await call_next(request)

        response = await call_next(request)
        query = str(request.url.query)
        ip = await get_real_ip(request)
        logger.info(f"{ip} {request.method} {path}" + (f"?{query}" if query else "") + f" {response.status_code}")
        return response
