"""Explicit rigid relations on finite carriers.

Reals are fixed-length binary strings; the neighbourhood predicate U_s(x) is
"s is a prefix of x", and the finite binary sequences are enumerated by length and
then lexicographically, so s_0 is the empty string.
"""

from collections import Counter
from typing import Iterable, Sequence

from pydantic import ValidationError

from src.construct.models import CantorPoint, LabeledPair, PrefixCode, SpineDesignation
from src.core.models import Permutation, Relation
from src.core.service import (
    automorphisms,
    is_hereditarily_rigid,
    is_irreflexive,
    relabel,
)
from src.exceptions import (
    ConstructionPreconditionError,
    HypothesisViolationError,
    InvalidArgumentError,
)
from src.logs.logger import get_logger

logger = get_logger("construct")


def points_of(bits: Iterable[str]) -> list[CantorPoint]:
    try:
        return [CantorPoint(bits=b) for b in bits]
    except ValidationError as e:
        raise InvalidArgumentError(f"invalid Cantor point: {e.errors()[0]['msg']}") from e


# -------- linear orders --------

def rigid_linear_order(n: int) -> Relation:
    if n < 0:
        raise InvalidArgumentError("vertex count must be non-negative")
    return Relation.of(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def ordinal_relation(gamma: int) -> Relation:
    """The ordinal gamma with its order, the canonical base for the product constructions."""
    return rigid_linear_order(gamma)


# -------- prefixes and separation --------

def prefix_code(index: int) -> str:
    if index < 0:
        raise InvalidArgumentError("prefix index must be non-negative")
    length = (index + 1).bit_length() - 1
    offset = index - (2 ** length - 1)
    return format(offset, f"0{length}b") if length else ""


def prefix_enumeration(count: int) -> list[PrefixCode]:
    if count < 0:
        raise InvalidArgumentError("count must be non-negative")
    return [PrefixCode(index=i, sequence=prefix_code(i)) for i in range(count)]


def neighborhood_signature(point: CantorPoint, k: int) -> tuple[bool, ...]:
    return tuple(point.extends(prefix_code(i)) for i in range(k))


def _require_distinct(points: Sequence[CantorPoint], what: str = "points"):
    repeated = [p.bits for p, c in Counter(points).items() if c > 1]
    if repeated:
        raise InvalidArgumentError(f"{what} are not pairwise distinct: {repeated[0]} repeats")


def _require_uniform_length(points: Iterable[CantorPoint]):
    lengths = {len(p.bits) for p in points}
    if len(lengths) > 1:
        raise InvalidArgumentError(f"points must share one bit length, got lengths {sorted(lengths)}")


def find_inseparable_pair(points: Sequence[CantorPoint], k: int) -> tuple[CantorPoint, CantorPoint] | None:
    _require_distinct(points)
    seen: dict[tuple[bool, ...], CantorPoint] = {}
    for point in points:
        signature = neighborhood_signature(point, k)
        if signature in seen:
            return seen[signature], point
        seen[signature] = point
    return None


def separation_check(points: Sequence[CantorPoint], k: int) -> bool:
    """True iff every two distinct points disagree on some U_{s_n} with n < k."""
    return find_inseparable_pair(points, k) is None


def minimal_chain_length(points: Sequence[CantorPoint]) -> int:
    _require_distinct(points)
    if len(points) < 2:
        return 0
    longest = max(len(p.bits) for p in points)
    # every string of length <= longest is among the first 2^(longest+1) - 1 prefixes
    for k in range(2 ** (longest + 1)):
        if find_inseparable_pair(points, k) is None:
            return k
    raise InvalidArgumentError("points cannot be separated by prefixes")


def _validate_spine(spine: SpineDesignation, size: int):
    for index in (spine.z_star, *spine.z_chain):
        if not 0 <= index < size:
            raise InvalidArgumentError(f"spine index {index} outside carrier [0, {size})")


def _spine_edges(spine: SpineDesignation) -> set[tuple[int, int]]:
    chain = spine.z_chain
    edges = {(spine.z_star, spine.z_star)}
    edges.update((z, spine.z_star) for z in chain)
    edges.update(zip(chain, chain[1:]))
    return edges


def _require_separated(points: Sequence[CantorPoint], k: int):
    pair = find_inseparable_pair(points, k)
    if pair is not None:
        raise ConstructionPreconditionError(
            f"points {pair[0].bits} and {pair[1].bits} lie in the same neighbourhoods "
            f"U_s_0 .. U_s_{k - 1}; a chain of length {minimal_chain_length(points)} is needed"
        )


def _require_base_hypothesis(base: Relation):
    loops = [u for u, v in base.edges if u == v]
    if loops:
        raise HypothesisViolationError(f"base relation is not irreflexive: loop at {loops[0]}")
    verdict = is_hereditarily_rigid(base)
    if not verdict.positive:
        raise HypothesisViolationError(
            f"base relation is not hereditarily rigid: substructure {list(verdict.witness_subset)} "
            f"has automorphism {list(verdict.witness_perm.images)}"
        )


def _validate_pairs(pairs: Sequence[LabeledPair], base: Relation):
    for pair in pairs:
        if pair.label >= base.n:
            raise InvalidArgumentError(f"label {pair.label} outside base [0, {base.n})")
    repeated = [p for p, c in Counter(pairs).items() if c > 1]
    if repeated:
        raise InvalidArgumentError(
            f"pairs are not pairwise distinct: ({repeated[0].point.bits}, {repeated[0].label}) repeats"
        )
    _require_uniform_length(p.point for p in pairs)


# -------- constructions --------

def cantor_relation(points: Sequence[CantorPoint], spine: SpineDesignation) -> Relation:
    _require_distinct(points)
    _require_uniform_length(points)
    _validate_spine(spine, len(points))

    k = len(spine.z_chain)
    outside = [i for i in range(len(points)) if i not in spine.members]
    _require_separated([points[i] for i in outside], k)

    edges = _spine_edges(spine)
    for n, z in enumerate(spine.z_chain):
        s_n = prefix_code(n)
        edges.update((z, y) for y in outside if points[y].extends(s_n))

    relation = Relation.of(len(points), edges)
    logger.info(f"cantor relation: {len(points)} points, chain {k}, {len(relation)} edges")
    return relation


def product_relation_main(
    pairs: Sequence[LabeledPair],
    base: Relation,
    spine: SpineDesignation,
    check_hypothesis: bool = True,
) -> Relation:
    _validate_pairs(pairs, base)
    _validate_spine(spine, len(pairs))
    if check_hypothesis:
        _require_base_hypothesis(base)

    k = len(spine.z_chain)
    outside = [i for i in range(len(pairs)) if i not in spine.members]
    _require_separated(list(dict.fromkeys(pairs[i].point for i in outside)), k)

    edges = _spine_edges(spine)
    for n, z in enumerate(spine.z_chain):
        s_n = prefix_code(n)
        edges.update((z, y) for y in outside if pairs[y].point.extends(s_n))
    base_edges = base.edge_set
    edges.update(
        (a, b) for a in outside for b in outside
        if (pairs[a].label, pairs[b].label) in base_edges
    )

    relation = Relation.of(len(pairs), edges)
    logger.info(f"product relation: {len(pairs)} pairs, chain {k}, {len(relation)} edges")
    return relation


def product_relation_lex(
    pairs: Sequence[LabeledPair],
    base: Relation,
    check_hypothesis: bool = True,
) -> Relation:
    """<x,b> R <y,c> iff x < y, or x = y and b R_1 c."""
    _validate_pairs(pairs, base)
    if check_hypothesis:
        _require_base_hypothesis(base)

    base_edges = base.edge_set
    edges = [
        (a, b)
        for a, p in enumerate(pairs)
        for b, q in enumerate(pairs)
        if p.point.bits < q.point.bits
        or (p.point == q.point and (p.label, q.label) in base_edges)
    ]
    relation = Relation.of(len(pairs), edges)
    logger.info(f"lexicographic product: {len(pairs)} pairs, {len(relation)} edges")
    return relation


def transfer_relation(r: Relation, bijection: Permutation) -> Relation:
    return relabel(r, bijection)


def spine_fixed_by_automorphisms(r: Relation, spine: SpineDesignation, max_n: int | None = None) -> bool:
    _validate_spine(spine, r.n)
    return all(p(i) == i for p in automorphisms(r, max_n=max_n) for i in spine.members)
