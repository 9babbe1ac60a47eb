from starlette.requests import Request

TRUSTED_PROXIES = ("127.0.0.1", "172.20.0.1")


async def get_real_ip(request: Request) -> str:
    if request.client is None:
        return "unknown"
    if "x-forwarded-for" in request.headers and request.client.host in TRUSTED_PROXIES:
        return request.headers["x-forwarded-for"].split(",")[0].strip()
    return request.client.host
