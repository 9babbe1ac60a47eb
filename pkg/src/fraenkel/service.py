"""Relations on finitely many atoms with a finite support, and the swap lemma.

The atom set is the finite range 0..N-1. A relation is E-symmetric when every
permutation of the atoms fixing E pointwise maps it onto itself; transpositions of
atoms outside E generate that group, so they are the only permutations tested.
"""

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, repeat
from typing import Iterable, Iterator

import numpy as np
from pydantic import ValidationError

from src.config import (
    FRAENKEL_LEMMA_BOUND,
    FRAENKEL_ORBIT_CLASS_BOUND,
    LEAST_SUPPORT_BOUND,
    WORKERS,
)
from src.core.models import Edge, Permutation
from src.core.service import check_bound, is_automorphism
from src.exceptions import InvalidArgumentError, NotApplicableError
from src.fraenkel.models import (
    GroupDescription,
    LemmaReport,
    PairOrbit,
    SupportedRelation,
    SupportReport,
    swap_preserves,
)
from src.logs.logger import get_logger

logger = get_logger("fraenkel")


def _support_of(atoms: int, support: Iterable[int]) -> tuple[int, ...]:
    support = tuple(sorted(set(support)))
    for a in support:
        if not 0 <= a < atoms:
            raise InvalidArgumentError(f"support atom {a} outside [0, {atoms})")
    return support


def supported_relation(atoms: int, edges: Iterable[Edge], support: Iterable[int]) -> SupportedRelation:
    try:
        return SupportedRelation(atoms=atoms, edges=tuple(edges), support=tuple(support))
    except ValidationError as e:
        raise InvalidArgumentError(e.errors()[0]["msg"].removeprefix("Value error, ")) from e


def is_e_symmetric(edges: Iterable[Edge], atoms: int, support: Iterable[int]) -> bool:
    group = GroupDescription.fix(atoms, _support_of(atoms, support))
    edge_set = frozenset(tuple(e) for e in edges)
    return all(swap_preserves(edge_set, a, b) for a, b in group.generators())


def pair_orbit(pair: Edge, group: GroupDescription) -> tuple[Edge, ...]:
    generators = list(group.generators())
    seen = {pair}
    queue = deque([pair])
    while queue:
        u, v = queue.popleft()
        for a, b in generators:
            image = (b if u == a else a if u == b else u, b if v == a else a if v == b else v)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return tuple(sorted(seen))


def orbit_classes(atoms: int, support: Iterable[int]) -> list[PairOrbit]:
    """The fix(E)-orbits partitioning all ordered pairs of atoms, ordered by least pair."""
    group = GroupDescription.fix(atoms, _support_of(atoms, support))
    assigned: set[Edge] = set()
    orbits = []
    for pair in ((u, v) for u in range(atoms) for v in range(atoms)):
        if pair in assigned:
            continue
        orbit = pair_orbit(pair, group)
        assigned.update(orbit)
        orbits.append(PairOrbit(pairs=orbit))
    return orbits


def e_symmetric_relations(atoms: int, support: Iterable[int]) -> Iterator[tuple[Edge, ...]]:
    """Every union of orbit classes, in binary counting order over the orbit list."""
    orbits = orbit_classes(atoms, support)
    for chosen in range(2 ** len(orbits)):
        yield tuple(sorted(
            pair for i, orbit in enumerate(orbits) if chosen >> i & 1 for pair in orbit.pairs
        ))


def least_support(edges: Iterable[Edge], atoms: int, max_n: int | None = None) -> tuple[int, ...]:
    if atoms < 0:
        raise InvalidArgumentError("atom count must be non-negative")
    check_bound("least support search", atoms, max_n if max_n is not None else LEAST_SUPPORT_BOUND)
    edge_set = frozenset(tuple(e) for e in edges)
    for size in range(atoms + 1):
        for support in combinations(range(atoms), size):
            if is_e_symmetric(edge_set, atoms, support):
                return support
    # unreachable: with every atom in the support nothing moves
    return tuple(range(atoms))


def _free_pair(atoms: int, support: tuple[int, ...]) -> tuple[int, int]:
    free = [a for a in range(atoms) if a not in support]
    if len(free) < 2:
        raise NotApplicableError(
            f"only {len(free)} atom(s) outside the support {list(support)}; two are needed to swap"
        )
    return free[0], free[1]


def nonrigidity_witness(rel: SupportedRelation) -> Permutation:
    """The swap of the two least atoms outside the support."""
    a, b = _free_pair(rel.atoms, rel.support)
    witness = Permutation.transposition(rel.atoms, a, b)
    if not is_automorphism(rel.relation, witness):
        raise RuntimeError(f"swap ({a} {b}) is not an automorphism of a relation supported by {rel.support}")
    return witness


# -------- lemma verification --------

EDGE_MASK_WIDTH = 64
UNION_CHUNK_CLASSES = 20
FAILURE_SAMPLE = 16


def _orbit_mask(atoms: int, pairs: Iterable[Edge]) -> int:
    return sum(1 << (u * atoms + v) for u, v in pairs)


def _swap_mask(atoms: int, mask: int, a: int, b: int) -> int:
    def move(x):
        return b if x == a else a if x == b else x

    return _orbit_mask(atoms, ((move(u), move(v)) for u, v in _edges_of(atoms, mask)))


def _edges_of(atoms: int, mask: int) -> tuple[Edge, ...]:
    return tuple((i // atoms, i % atoms) for i in range(atoms * atoms) if mask >> i & 1)


def _unions(masks: list[int]) -> np.ndarray:
    """Entry i is the union of masks[j] over the set bits j of i."""
    unions = np.zeros(1, dtype=np.uint64)
    for mask in masks:
        unions = np.concatenate((unions, unions | np.uint64(mask)))
    return unions


def check_orbit_unions(atoms: int, orbit_masks: list[int], a: int, b: int) -> tuple[int, int, list[tuple[Edge, ...]]]:
    """Apply the swap (a b) to every union of the given edge masks.

    Returns the number of unions tested, the number the swap moves, and the first
    few moved unions as edge tuples. The swap acts bijectively on pairs, so the image
    of a union is the union of the images.
    """
    check_bound("edge bitmask width", atoms * atoms, EDGE_MASK_WIDTH)
    image_masks = [_swap_mask(atoms, m, a, b) for m in orbit_masks]
    low = min(len(orbit_masks), UNION_CHUNK_CLASSES)
    low_masks, low_images = _unions(orbit_masks[:low]), _unions(image_masks[:low])
    high_masks, high_images = _unions(orbit_masks[low:]), _unions(image_masks[low:])

    moved = 0
    sample: list[tuple[Edge, ...]] = []
    for high_mask, high_image in zip(high_masks, high_images):
        masks = low_masks | high_mask
        bad = np.flatnonzero(masks != (low_images | high_image))
        moved += int(bad.size)
        sample.extend(_edges_of(atoms, int(m)) for m in masks[bad[:FAILURE_SAMPLE - len(sample)]])
    return 2 ** len(orbit_masks), moved, sample


def _verify_support(atoms: int, support: tuple[int, ...], orbit_bound: int) -> SupportReport:
    orbits = orbit_classes(atoms, support)
    check_bound(f"orbit classes of support {list(support)}", len(orbits), orbit_bound)
    witness = nonrigidity_witness(supported_relation(atoms, (), support))
    a, b = (i for i, image in enumerate(witness.images) if i != image)

    relations, moved, sample = check_orbit_unions(
        atoms, [_orbit_mask(atoms, orbit.pairs) for orbit in orbits], a, b
    )
    logger.debug(f"support {support}: {len(orbits)} orbit classes, {relations} relations, {moved} failures")
    return SupportReport(
        support=support,
        orbit_classes=len(orbits),
        relations=relations,
        witness=(a, b),
        failure_count=moved,
        failures=sample,
    )


def verify_lemma(
    atoms: int,
    max_support: int | None = None,
    max_n: int | None = None,
    workers: int | None = None,
    orbit_bound: int | None = None,
) -> LemmaReport:
    """Check the swap witness on every relation supported by some E with |E| <= max_support."""
    check_bound("lemma verification", atoms, max_n if max_n is not None else FRAENKEL_LEMMA_BOUND)
    if atoms < 0:
        raise InvalidArgumentError("atom count must be non-negative")
    if atoms < 2:
        logger.info(f"lemma verification on {atoms} atom(s) is not applicable")
        return LemmaReport(atoms=atoms, max_support=max_support if max_support is not None else max(atoms - 2, 0),
                           applicable=False)
    if max_support is None:
        max_support = atoms - 2
    if not 0 <= max_support <= atoms - 2:
        raise InvalidArgumentError(f"max support must lie in [0, {atoms - 2}] for {atoms} atoms")

    bound = orbit_bound if orbit_bound is not None else FRAENKEL_ORBIT_CLASS_BOUND
    supports = [s for size in range(max_support + 1) for s in combinations(range(atoms), size)]
    workers = workers or WORKERS
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_verify_support, repeat(atoms), supports, repeat(bound)))
    else:
        reports = [_verify_support(atoms, s, bound) for s in supports]

    report = LemmaReport(atoms=atoms, max_support=max_support, applicable=True, supports=reports)
    logger.info(f"lemma on {atoms} atoms, supports up to {max_support}: "
                f"{report.relations_checked} relations, {report.failure_count} failures")
    return report
