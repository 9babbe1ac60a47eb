"""Decision kernels for automorphisms, endomorphisms and the three rigidity notions.

The search kernels work on a boolean adjacency matrix so that callers enumerating
many relations (census, substructure scans) can skip building ``Relation`` models.
Candidates are always tried in lexicographic order of their image tuples, which
makes every returned witness reproducible.
"""

from typing import Iterable, Iterator, Sequence

from src.config import (
    AUTOMORPHISM_SEARCH_BOUND,
    ENDOMORPHISM_SEARCH_BOUND,
    HEREDITARY_SEARCH_BOUND,
)
from src.core.models import (
    HereditaryStatus,
    HereditaryVerdict,
    Permutation,
    Relation,
    RigidityStatus,
    RigidityVerdict,
    StrongRigidityStatus,
    StrongRigidityVerdict,
    VertexMap,
)
from src.exceptions import InvalidArgumentError, ResourceLimitError
from src.logs.logger import get_logger

logger = get_logger("core")

Matrix = Sequence[Sequence[bool]]


def check_bound(what: str, size: int, bound: int):
    if size > bound:
        raise ResourceLimitError(what, size, bound)


# -------- matrix kernels --------

def degree_signatures(m: Matrix) -> list[tuple[int, int, bool]]:
    n = len(m)
    return [
        (sum(1 for u in range(n) if m[u][v]), sum(1 for u in range(n) if m[v][u]), bool(m[v][v]))
        for v in range(n)
    ]


def iter_automorphisms(m: Matrix) -> Iterator[tuple[int, ...]]:
    """Backtracking over partial images, pruned by (in-degree, out-degree, loop)."""
    n = len(m)
    sig = degree_signatures(m)
    images = [0] * n
    used = [False] * n

    def extend(v: int):
        if v == n:
            yield tuple(images)
            return
        row_v = m[v]
        for w in range(n):
            if used[w] or sig[w] != sig[v]:
                continue
            row_w = m[w]
            if any(
                row_v[u] != row_w[images[u]] or m[u][v] != m[images[u]][w]
                for u in range(v)
            ):
                continue
            images[v] = w
            used[w] = True
            yield from extend(v + 1)
            used[w] = False

    yield from extend(0)


def iter_endomorphisms(m: Matrix) -> Iterator[tuple[int, ...]]:
    """Backtracking over self-maps; an edge is checked once both endpoints are assigned."""
    n = len(m)
    earlier = [[u for u in range(v) if m[u][v] or m[v][u]] for v in range(n)]
    images = [0] * n

    def extend(v: int):
        if v == n:
            yield tuple(images)
            return
        for w in range(n):
            if m[v][v] and not m[w][w]:
                continue
            if any(
                (m[u][v] and not m[images[u]][w]) or (m[v][u] and not m[w][images[u]])
                for u in earlier[v]
            ):
                continue
            images[v] = w
            yield from extend(v + 1)

    yield from extend(0)


def _is_identity(images: tuple[int, ...]) -> bool:
    return all(i == image for i, image in enumerate(images))


def find_nontrivial_automorphism(m: Matrix) -> tuple[int, ...] | None:
    return next((p for p in iter_automorphisms(m) if not _is_identity(p)), None)


def find_nontrivial_endomorphism(m: Matrix) -> tuple[int, ...] | None:
    return next((f for f in iter_endomorphisms(m) if not _is_identity(f)), None)


def count_automorphisms(m: Matrix) -> int:
    return sum(1 for _ in iter_automorphisms(m))


def submatrix(m: Matrix, subset: Sequence[int]) -> list[list[bool]]:
    return [[m[a][b] for b in subset] for a in subset]


def subsets_in_lex_order(n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of [0, n) as sorted tuples, in plain tuple order: (0,), (0, 1), (0, 1, 2), ..."""
    def extend(prefix: tuple[int, ...]):
        for v in range(prefix[-1] + 1 if prefix else 0, n):
            subset = prefix + (v,)
            yield subset
            yield from extend(subset)

    yield from extend(())


def find_non_rigid_subset(m: Matrix) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Lexicographically least subset whose induced substructure has a nontrivial automorphism."""
    for subset in subsets_in_lex_order(len(m)):
        if len(subset) < 2:
            continue
        witness = find_nontrivial_automorphism(submatrix(m, subset))
        if witness is not None:
            return subset, witness
    return None


# -------- relation-level operations --------

def is_automorphism(r: Relation, p: Permutation) -> bool:
    if p.n != r.n:
        raise InvalidArgumentError(f"permutation acts on {p.n} vertices, relation has {r.n}")
    edges = r.edge_set
    # a bijection maps the edge set injectively, so equal sizes suffice
    return all((p(a), p(b)) in edges for a, b in r.edges)


def is_endomorphism(r: Relation, f: VertexMap) -> bool:
    if f.n != r.n:
        raise InvalidArgumentError(f"map acts on {f.n} vertices, relation has {r.n}")
    edges = r.edge_set
    return all((f(a), f(b)) in edges for a, b in r.edges)


def automorphisms(r: Relation, max_n: int | None = None) -> list[Permutation]:
    check_bound("automorphism search", r.n, max_n if max_n is not None else AUTOMORPHISM_SEARCH_BOUND)
    result = [Permutation(images=p) for p in iter_automorphisms(r.matrix)]
    logger.debug(f"n={r.n} edges={len(r)} automorphisms={len(result)}")
    return result


def automorphism_count(r: Relation, max_n: int | None = None) -> int:
    check_bound("automorphism search", r.n, max_n if max_n is not None else AUTOMORPHISM_SEARCH_BOUND)
    return count_automorphisms(r.matrix)


def endomorphisms(r: Relation, max_n: int | None = None) -> list[VertexMap]:
    check_bound("endomorphism search", r.n, max_n if max_n is not None else ENDOMORPHISM_SEARCH_BOUND)
    return [VertexMap(images=f) for f in iter_endomorphisms(r.matrix)]


def is_rigid(r: Relation, max_n: int | None = None) -> RigidityVerdict:
    check_bound("automorphism search", r.n, max_n if max_n is not None else AUTOMORPHISM_SEARCH_BOUND)
    witness = find_nontrivial_automorphism(r.matrix)
    if witness is None:
        return RigidityVerdict(status=RigidityStatus.RIGID)
    logger.debug(f"n={r.n} not rigid, witness {witness}")
    return RigidityVerdict(status=RigidityStatus.NOT_RIGID, witness=Permutation(images=witness))


def is_strongly_rigid(r: Relation, max_n: int | None = None) -> StrongRigidityVerdict:
    check_bound("endomorphism search", r.n, max_n if max_n is not None else ENDOMORPHISM_SEARCH_BOUND)
    witness = find_nontrivial_endomorphism(r.matrix)
    if witness is None:
        return StrongRigidityVerdict(status=StrongRigidityStatus.STRONGLY_RIGID)
    return StrongRigidityVerdict(
        status=StrongRigidityStatus.NOT_STRONGLY_RIGID, witness=VertexMap(images=witness)
    )


def is_hereditarily_rigid(r: Relation, max_n: int | None = None) -> HereditaryVerdict:
    check_bound("hereditary search", r.n, max_n if max_n is not None else HEREDITARY_SEARCH_BOUND)
    found = find_non_rigid_subset(r.matrix)
    if found is None:
        return HereditaryVerdict(status=HereditaryStatus.HEREDITARILY_RIGID)
    subset, witness = found
    return HereditaryVerdict(
        status=HereditaryStatus.NOT_HEREDITARILY_RIGID,
        witness_subset=subset,
        witness_perm=Permutation(images=witness),
    )


def is_irreflexive(r: Relation) -> bool:
    return all(u != v for u, v in r.edges)


def induced_substructure(r: Relation, subset: Iterable[int]) -> Relation:
    vertices = sorted(set(subset))
    for v in vertices:
        if not 0 <= v < r.n:
            raise InvalidArgumentError(f"vertex {v} outside [0, {r.n})")
    position = {v: i for i, v in enumerate(vertices)}
    return Relation.of(
        len(vertices),
        ((position[u], position[v]) for u, v in r.edges if u in position and v in position),
    )


def relabel(r: Relation, p: Permutation) -> Relation:
    if p.n != r.n:
        raise InvalidArgumentError(f"permutation acts on {p.n} vertices, relation has {r.n}")
    return Relation.of(r.n, ((p(u), p(v)) for u, v in r.edges))


# -------- permutation helpers --------

def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q."""
    if p.n != q.n:
        raise InvalidArgumentError(f"cannot compose permutations on {p.n} and {q.n} points")
    return Permutation(images=tuple(p(q(i)) for i in range(p.n)))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.n
    for i, image in enumerate(p.images):
        images[image] = i
    return Permutation(images=tuple(images))


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    """Orbits of p, each listed from its least point, ordered by that point."""
    seen = [False] * p.n
    cycles = []
    for start in range(p.n):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = p(v)
        cycles.append(tuple(cycle))
    return cycles
