"""Exhaustive classification of small relations by rigidity type.

A relation on n labeled vertices is encoded as an n*n bitmask, bit u*n + v standing
for the edge (u, v). Labeled enumeration is the ground truth; isomorph rejection keeps
one canonical mask per isomorphism class (the least mask over all relabelings) and
weights it by its class size n!/|Aut|.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import permutations, repeat
from math import factorial
from typing import Iterable

import numpy as np

from src.census.models import (
    CENSUS_COLUMNS,
    CensusRow,
    GraphCensusRow,
    RigidNonHereditaryExample,
)
from src.config import (
    CENSUS_ISOMORPH_BOUND,
    CENSUS_LABELED_BOUND,
    GRAPH_CENSUS_BOUND,
    NON_HEREDITARY_EXAMPLES_BOUND,
    STRONG_EXAMPLES_BOUND,
    WORKERS,
)
from src.core.models import Permutation, Relation
from src.core.service import (
    check_bound,
    count_automorphisms,
    cycle_decomposition,
    find_non_rigid_subset,
    find_nontrivial_automorphism,
    find_nontrivial_endomorphism,
)
from src.exceptions import InvalidArgumentError
from src.logs.logger import get_logger

logger = get_logger("census")

CHUNK = 1 << 12
NUMPY_CHUNK = 1 << 20


def matrix_of(n: int, mask: int) -> list[list[bool]]:
    return [[bool(mask >> (u * n + v) & 1) for v in range(n)] for u in range(n)]


def mask_of(r: Relation) -> int:
    return sum(1 << (u * r.n + v) for u, v in r.edges)


def relation_of(n: int, mask: int) -> Relation:
    return Relation.of(n, ((i // n, i % n) for i in range(n * n) if mask >> i & 1))


def _pair_permutation(n: int, p: tuple[int, ...]) -> list[int]:
    return [p[i // n] * n + p[i % n] for i in range(n * n)]


def relabel_mask(n: int, mask: int, p: tuple[int, ...]) -> int:
    target = _pair_permutation(n, p)
    return sum(1 << target[i] for i in range(n * n) if mask >> i & 1)


def canonical_form(r: Relation) -> int:
    """Least edge bitmask over all relabelings of r."""
    mask = mask_of(r)
    return min(relabel_mask(r.n, mask, p) for p in permutations(range(r.n)))


# -------- Burnside --------

def fixed_relation_count(p: Permutation) -> int:
    """Relations fixed by p: 2 to the number of cycles of p acting on ordered pairs."""
    pair_action = Permutation(images=tuple(_pair_permutation(p.n, p.images)))
    return 2 ** len(cycle_decomposition(pair_action))


def isomorphism_class_count(n: int) -> int:
    total = sum(fixed_relation_count(Permutation(images=p)) for p in permutations(range(n)))
    return total // factorial(n)


# -------- canonical representatives --------

def _byte_tables(n: int, p: tuple[int, ...]) -> list[np.ndarray]:
    target = _pair_permutation(n, p)
    bits = n * n
    tables = []
    for chunk in range((bits + 7) // 8):
        table = np.zeros(256, dtype=np.int64)
        for byte in range(256):
            image = 0
            for j in range(8):
                i = chunk * 8 + j
                if byte >> j & 1 and i < bits:
                    image |= 1 << target[i]
            table[byte] = image
        tables.append(table)
    return tables


def canonical_representatives(n: int) -> list[int]:
    """Masks that are least in their isomorphism class, ascending."""
    bits = n * n
    perm_tables = [_byte_tables(n, p) for p in permutations(range(n))][1:]
    reps: list[int] = []
    for start in range(0, 2 ** bits, NUMPY_CHUNK):
        masks = np.arange(start, min(start + NUMPY_CHUNK, 2 ** bits), dtype=np.int64)
        for tables in perm_tables:
            image = np.zeros_like(masks)
            for chunk, table in enumerate(tables):
                image |= table[(masks >> (8 * chunk)) & 0xFF]
            masks = masks[image >= masks]
            if masks.size == 0:
                break
        reps.extend(int(m) for m in masks)
    logger.debug(f"n={n}: {len(reps)} canonical representatives")
    return reps


# -------- classification --------

def _classify(n: int, mask: int) -> tuple[int, int, int, int]:
    m = matrix_of(n, mask)
    if find_nontrivial_automorphism(m) is not None:
        return 0, 0, 0, 0
    strong = find_nontrivial_endomorphism(m) is None
    hereditary = find_non_rigid_subset(m) is None
    irreflexive = not any(m[v][v] for v in range(n))
    return 1, int(strong), int(hereditary), int(hereditary and irreflexive)


def _classify_range(n: int, start: int, stop: int) -> tuple[int, int, int, int]:
    totals = [0, 0, 0, 0]
    for mask in range(start, stop):
        for i, flag in enumerate(_classify(n, mask)):
            totals[i] += flag
    return tuple(totals)


def _classify_representatives(n: int, reps: list[int]) -> tuple[int, int, int, int]:
    totals = [0, 0, 0, 0]
    for mask in reps:
        flags = _classify(n, mask)
        if flags[0]:
            # a rigid class has n! labeled members
            size = factorial(n)
            for i, flag in enumerate(flags):
                totals[i] += flag * size
    return tuple(totals)


def _require_size(n: int):
    if n < 0:
        raise InvalidArgumentError(f"vertex count must be non-negative, got {n}")


def census_bound(isomorph_rejection: bool = False, max_n: int | None = None) -> int:
    if max_n is not None:
        return max_n
    return CENSUS_ISOMORPH_BOUND if isomorph_rejection else CENSUS_LABELED_BOUND


def census(
    n: int,
    isomorph_rejection: bool = False,
    max_n: int | None = None,
    workers: int | None = None,
) -> CensusRow:
    _require_size(n)
    if isomorph_rejection:
        check_bound("census with isomorph rejection", n, census_bound(True, max_n))
        reps = canonical_representatives(n)
        rigid, strong, hereditary, irreflexive = _classify_representatives(n, reps)
    else:
        check_bound("labeled census", n, census_bound(False, max_n))
        total = 2 ** (n * n)
        starts = range(0, total, CHUNK)
        stops = [min(start + CHUNK, total) for start in starts]
        workers = workers or WORKERS
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_classify_range, repeat(n), starts, stops))
        else:
            parts = [_classify_range(n, start, stop) for start, stop in zip(starts, stops)]
        rigid, strong, hereditary, irreflexive = (sum(column) for column in zip(*parts))

    row = CensusRow(
        n=n,
        total=2 ** (n * n),
        rigid=rigid,
        strongly_rigid=strong,
        hereditarily_rigid=hereditary,
        irreflexive_hereditarily_rigid=irreflexive,
    )
    logger.info(f"census {row.tsv()}")
    return row


def census_table(rows: Iterable[CensusRow]) -> str:
    lines = ["\t".join(CENSUS_COLUMNS)]
    lines.extend(row.tsv() for row in rows)
    return "\n".join(lines) + "\n"


def smallest_strongly_rigid_examples(n: int, max_n: int | None = None) -> list[Relation]:
    """Every strongly rigid relation on n labeled vertices, in lexicographic edge order."""
    _require_size(n)
    check_bound("strongly rigid examples", n, max_n if max_n is not None else STRONG_EXAMPLES_BOUND)
    masks = set()
    for rep in canonical_representatives(n):
        if find_nontrivial_endomorphism(matrix_of(n, rep)) is None:
            masks.update(relabel_mask(n, rep, p) for p in permutations(range(n)))
    return sorted((relation_of(n, mask) for mask in masks), key=lambda r: r.edges)


def rigid_not_hereditary_examples(n: int, max_n: int | None = None) -> list[RigidNonHereditaryExample]:
    _require_size(n)
    check_bound("rigid non-hereditary examples", n, max_n if max_n is not None else NON_HEREDITARY_EXAMPLES_BOUND)
    examples = []
    for mask in range(2 ** (n * n)):
        m = matrix_of(n, mask)
        if find_nontrivial_automorphism(m) is not None:
            continue
        found = find_non_rigid_subset(m)
        if found is not None:
            subset, witness = found
            examples.append(RigidNonHereditaryExample(
                relation=relation_of(n, mask),
                witness_subset=subset,
                witness_perm=Permutation(images=witness),
            ))
    return sorted(examples, key=lambda e: e.relation.edges)


def graph_census(n: int, max_n: int | None = None) -> GraphCensusRow:
    _require_size(n)
    check_bound("graph census", n, max_n if max_n is not None else GRAPH_CENSUS_BOUND)
    slots = [(u, v) for u in range(n) for v in range(u, n)]
    symmetric_rigid = simple_total = simple_rigid = 0
    for chosen in range(2 ** len(slots)):
        m = [[False] * n for _ in range(n)]
        loops = False
        for i, (u, v) in enumerate(slots):
            if chosen >> i & 1:
                m[u][v] = m[v][u] = True
                loops = loops or u == v
        rigid = find_nontrivial_automorphism(m) is None
        symmetric_rigid += rigid
        if not loops:
            simple_total += 1
            simple_rigid += rigid

    row = GraphCensusRow(
        n=n,
        symmetric_total=2 ** len(slots),
        symmetric_rigid=symmetric_rigid,
        simple_total=simple_total,
        simple_rigid=simple_rigid,
    )
    logger.info(f"graph census {row.model_dump()}")
    return row


def automorphism_total(n: int) -> int:
    """Sum of |Aut(r)| over all labeled relations on n vertices."""
    return sum(count_automorphisms(matrix_of(n, mask)) for mask in range(2 ** (n * n)))
