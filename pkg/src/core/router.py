from enum import Enum

from fastapi import APIRouter, Query
from starlette.concurrency import run_in_threadpool

from src.core.models import Permutation, Relation
from src.core.service import (
    automorphisms,
    is_hereditarily_rigid,
    is_irreflexive,
    is_rigid,
    is_strongly_rigid,
)

router = APIRouter()


class CheckMode(str, Enum):
    rigid = "rigid"
    strong = "strong"
    hereditary = "hereditary"
    irreflexive = "irreflexive"


CHECKS = {
    CheckMode.rigid: is_rigid,
    CheckMode.strong: is_strongly_rigid,
    CheckMode.hereditary: is_hereditarily_rigid,
}


@router.post("/check/{mode}")
async def check_relation(
    mode: CheckMode,
    relation: Relation,
    max_n: int | None = Query(None, ge=0),
) -> dict:
    if mode == CheckMode.irreflexive:
        return {"irreflexive": is_irreflexive(relation)}
    verdict = await run_in_threadpool(CHECKS[mode], relation, max_n=max_n)
    return verdict.model_dump(mode="json")


@router.post("/automorphisms")
async def list_automorphisms(relation: Relation, max_n: int | None = Query(None, ge=0)) -> list[Permutation]:
    return await run_in_threadpool(automorphisms, relation, max_n=max_n)
