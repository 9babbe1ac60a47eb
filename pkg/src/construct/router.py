from fastapi import APIRouter, Query
from starlette.concurrency import run_in_threadpool

from src.construct.models import CantorRequest, ProductLexRequest, ProductMainRequest
from src.construct.service import (
    cantor_relation,
    ordinal_relation,
    product_relation_lex,
    product_relation_main,
    rigid_linear_order,
)
from src.core.models import Relation

router = APIRouter()


@router.post("/linorder/{n}")
async def build_linear_order(n: int) -> Relation:
    return rigid_linear_order(n)


@router.post("/ordinal/{gamma}")
async def build_ordinal(gamma: int) -> Relation:
    return ordinal_relation(gamma)


@router.post("/cantor")
async def build_cantor(request: CantorRequest) -> Relation:
    return cantor_relation(request.points, request.spine)


# the product constructions run the hereditary check on the base unless unsafe is set
@router.post("/product-main")
async def build_product_main(request: ProductMainRequest, unsafe: bool = Query(False)) -> Relation:
    return await run_in_threadpool(
        product_relation_main, request.pairs, request.base, request.spine, check_hypothesis=not unsafe
    )


@router.post("/product-lex")
async def build_product_lex(request: ProductLexRequest, unsafe: bool = Query(False)) -> Relation:
    return await run_in_threadpool(product_relation_lex, request.pairs, request.base, check_hypothesis=not unsafe)
