from fastapi import APIRouter, Query
from pydantic import BaseModel
from starlette.concurrency import run_in_threadpool

from src.core.models import Edge
from src.fraenkel.models import LemmaReport
from src.fraenkel.service import least_support, verify_lemma

router = APIRouter()


class LeastSupportRequest(BaseModel):
    atoms: int
    edges: list[Edge] = []


@router.get("/verify")
async def verify(
    atoms: int = Query(..., ge=0),
    max_support: int | None = Query(None, ge=0),
) -> LemmaReport:
    return await run_in_threadpool(verify_lemma, atoms, max_support=max_support)


@router.post("/least-support")
async def find_least_support(request: LeastSupportRequest) -> dict:
    support = await run_in_threadpool(least_support, request.edges, request.atoms)
    return {"support": list(support)}
