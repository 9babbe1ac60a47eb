from fastapi import APIRouter, Query
from starlette.concurrency import run_in_threadpool

from src.census.models import CensusRow, GraphCensusRow
from src.census.service import census, graph_census

router = APIRouter()


@router.get("/graphs/{n}")
async def get_graph_census(n: int) -> GraphCensusRow:
    return await run_in_threadpool(graph_census, n)


@router.get("/{n}")
async def get_census(n: int, isomorph_rejection: bool = Query(False)) -> CensusRow:
    return await run_in_threadpool(census, n, isomorph_rejection=isomorph_rejection)
