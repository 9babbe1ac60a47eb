from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from networkx.algorithms.isomorphism import DiGraphMatcher

from src.cli.relation_file import to_networkx
from src.construct.service import rigid_linear_order
from src.core.models import (
    HereditaryStatus,
    Permutation,
    Relation,
    RigidityStatus,
    RigidityVerdict,
    StrongRigidityStatus,
    VertexMap,
)
from src.core.service import (
    automorphism_count,
    automorphisms,
    compose,
    cycle_decomposition,
    endomorphisms,
    induced_substructure,
    inverse,
    is_automorphism,
    is_endomorphism,
    is_hereditarily_rigid,
    is_irreflexive,
    is_rigid,
    is_strongly_rigid,
    relabel,
    subsets_in_lex_order,
)
from src.exceptions import InvalidArgumentError, ResourceLimitError
from tests.strategies import relation_with_permutation, relations


def brute_force_automorphisms(r: Relation) -> list[tuple[int, ...]]:
    return [p for p in permutations(range(r.n)) if {(p[u], p[v]) for u, v in r.edges} == r.edge_set]


# -------- models --------

def test_relation_sorts_and_dedupes_edges():
    r = Relation.of(3, [(2, 0), (0, 1), (2, 0)])
    assert r.edges == ((0, 1), (2, 0))
    assert len(r) == 2
    assert r.has_edge(2, 0) and not r.has_edge(0, 2)


def test_relation_rejects_out_of_range_edge():
    with pytest.raises(InvalidArgumentError, match="outside"):
        Relation.of(2, [(0, 2)])


def test_relation_matrix():
    assert Relation.of(2, [(0, 1)]).matrix == ((False, True), (False, False))


def test_permutation_must_be_bijection():
    with pytest.raises(InvalidArgumentError, match="not a bijection"):
        Permutation.of([0, 0])
    assert Permutation.transposition(3, 0, 2).images == (2, 1, 0)


def test_vertex_map_must_be_total():
    with pytest.raises(InvalidArgumentError):
        VertexMap.of([0, 3, 1])
    assert VertexMap.constant(3, 1).images == (1, 1, 1)


def test_verdict_witness_present_exactly_when_negative():
    with pytest.raises(ValueError):
        RigidityVerdict(status=RigidityStatus.RIGID, witness=Permutation.of([1, 0]))
    with pytest.raises(ValueError):
        RigidityVerdict(status=RigidityStatus.NOT_RIGID)
    with pytest.raises(ValueError):
        RigidityVerdict(status=RigidityStatus.NOT_RIGID, witness=Permutation.identity(2))


# -------- automorphisms and endomorphisms --------

def test_is_automorphism(linear_order3, empty2):
    assert is_automorphism(Relation.of(2, [(0, 1), (1, 0)]), Permutation.of([1, 0]))
    assert not is_automorphism(Relation.of(2, [(0, 1)]), Permutation.of([1, 0]))
    assert is_automorphism(empty2, Permutation.of([1, 0]))
    assert is_automorphism(linear_order3, Permutation.identity(3))


def test_is_automorphism_size_mismatch():
    with pytest.raises(InvalidArgumentError):
        is_automorphism(Relation.empty(3), Permutation.identity(2))


def test_is_endomorphism():
    assert is_endomorphism(Relation.of(2, [(0, 0), (0, 1)]), VertexMap.of([0, 0]))
    assert not is_endomorphism(Relation.of(2, [(0, 1)]), VertexMap.of([0, 0]))
    assert is_endomorphism(Relation.of(2, [(0, 1)]), VertexMap.identity(2))


def test_automorphisms_in_lexicographic_order(cycle3, linear_order3):
    assert [p.images for p in automorphisms(Relation.empty(3))] == list(permutations(range(3)))
    assert [p.images for p in automorphisms(linear_order3)] == [(0, 1, 2)]
    assert [p.images for p in automorphisms(cycle3)] == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]


def test_endomorphisms_of_a_loop():
    maps = endomorphisms(Relation.of(2, [(0, 0)]))
    assert [f.images for f in maps] == [(0, 0), (0, 1)]


def test_automorphism_count():
    assert automorphism_count(Relation.empty(4)) == 24
    assert automorphism_count(rigid_linear_order(6)) == 1


# -------- rigidity --------

def test_is_rigid(linear_order3, empty2, cycle3):
    assert is_rigid(linear_order3).status == RigidityStatus.RIGID
    assert is_rigid(linear_order3).witness is None

    verdict = is_rigid(empty2)
    assert verdict.status == RigidityStatus.NOT_RIGID
    assert verdict.witness.images == (1, 0)

    assert is_rigid(cycle3).witness.images == (1, 2, 0)


def test_is_rigid_trivial_carriers():
    assert is_rigid(Relation.empty(0)).positive
    assert is_rigid(Relation.empty(1)).positive


def test_is_rigid_over_bound():
    with pytest.raises(ResourceLimitError, match="exceeds the configured bound"):
        is_rigid(Relation.empty(11))
    assert is_rigid(rigid_linear_order(11), max_n=11).positive


def test_is_strongly_rigid():
    assert is_strongly_rigid(Relation.of(2, [(0, 1)])).status == StrongRigidityStatus.STRONGLY_RIGID

    verdict = is_strongly_rigid(Relation.of(2, [(0, 0), (0, 1)]))
    assert verdict.status == StrongRigidityStatus.NOT_STRONGLY_RIGID
    assert verdict.witness.images == (0, 0)


def test_is_strongly_rigid_over_bound():
    with pytest.raises(ResourceLimitError):
        is_strongly_rigid(rigid_linear_order(8))


def test_is_hereditarily_rigid(path3):
    assert is_hereditarily_rigid(rigid_linear_order(4)).status == HereditaryStatus.HEREDITARILY_RIGID
    assert is_hereditarily_rigid(Relation.empty(1)).positive

    verdict = is_hereditarily_rigid(path3)
    assert verdict.status == HereditaryStatus.NOT_HEREDITARILY_RIGID
    assert verdict.witness_subset == (0, 2)
    assert verdict.witness_perm.images == (1, 0)


def test_hereditary_witness_is_least_in_tuple_order():
    # the 3-cycle on {0, 1, 2} comes before the symmetric pair {0, 3}
    r = Relation.of(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 0)])
    verdict = is_hereditarily_rigid(r)
    assert verdict.witness_subset == (0, 1, 2)
    assert verdict.witness_perm.images == (1, 2, 0)


def test_subsets_in_lex_order():
    assert list(subsets_in_lex_order(3)) == [(0,), (0, 1), (0, 1, 2), (0, 2), (1,), (1, 2), (2,)]
    assert list(subsets_in_lex_order(0)) == []


def test_is_irreflexive(linear_order3):
    assert is_irreflexive(linear_order3)
    assert not is_irreflexive(Relation.of(3, [(1, 1)]))
    assert is_irreflexive(Relation.empty(0))


def test_induced_substructure(path3):
    assert induced_substructure(path3, [0, 2]) == Relation.empty(2)
    assert induced_substructure(path3, [1, 2]).edges == ((0, 1),)
    with pytest.raises(InvalidArgumentError):
        induced_substructure(path3, [3])


@pytest.mark.parametrize("n", range(9))
def test_linear_orders_have_only_the_identity(n):
    r = rigid_linear_order(n)
    assert is_rigid(r).positive
    assert len(brute_force_automorphisms(r)) == 1


# -------- permutations --------

def test_cycle_decomposition():
    assert cycle_decomposition(Permutation.of([1, 2, 0, 3])) == [(0, 1, 2), (3,)]
    assert cycle_decomposition(Permutation.identity(0)) == []


def test_compose_and_inverse():
    p = Permutation.of([1, 2, 0])
    q = Permutation.of([0, 2, 1])
    assert compose(p, q).images == (1, 0, 2)
    assert compose(p, inverse(p)).is_identity


# -------- properties --------

@settings(max_examples=500, deadline=None)
@given(relations(max_n=5))
def test_automorphisms_match_brute_force(r):
    assert [p.images for p in automorphisms(r)] == brute_force_automorphisms(r)


@settings(max_examples=200, deadline=None)
@given(relations(max_n=5))
def test_automorphisms_form_a_group(r):
    group = automorphisms(r)
    images = {p.images for p in group}
    assert tuple(range(r.n)) in images
    for p in group:
        assert inverse(p).images in images
        for q in group:
            assert compose(p, q).images in images


@settings(max_examples=200, deadline=None)
@given(relations(max_n=5))
def test_witness_is_least_nontrivial_automorphism(r):
    nontrivial = [p for p in brute_force_automorphisms(r) if p != tuple(range(r.n))]
    verdict = is_rigid(r)
    if nontrivial:
        assert verdict.witness.images == nontrivial[0]
        assert is_automorphism(r, verdict.witness)
    else:
        assert verdict.positive


@settings(max_examples=200, deadline=None)
@given(relations(max_n=5))
def test_rigidity_notions_are_nested(r):
    for p in automorphisms(r):
        assert is_endomorphism(r, VertexMap.of(p.images))
    assert is_endomorphism(r, VertexMap.identity(r.n))
    if is_strongly_rigid(r).positive:
        assert is_rigid(r).positive
    if is_hereditarily_rigid(r).positive:
        assert is_rigid(r).positive


@settings(max_examples=200, deadline=None)
@given(relation_with_permutation(max_n=5))
def test_rigidity_is_invariant_under_relabeling(case):
    r, p = case
    relabeled = relabel(r, p)
    assert is_rigid(relabeled).positive == is_rigid(r).positive
    assert automorphism_count(relabeled) == automorphism_count(r)


@settings(max_examples=200, deadline=None)
@given(relations(min_n=1, max_n=5))
def test_automorphism_count_matches_networkx(r):
    g = to_networkx(r)
    expected = sum(1 for _ in DiGraphMatcher(g, g).isomorphisms_iter())
    assert automorphism_count(r) == expected
    assert isinstance(g, nx.DiGraph)


@pytest.mark.parametrize(
    "r",
    [
        Relation.empty(6),
        rigid_linear_order(6),
        Relation.of(6, [(i, (i + 1) % 6) for i in range(6)]),
        Relation.of(6, [(0, 0), (1, 1), (2, 3), (3, 2), (4, 5)]),
    ],
)
def test_automorphisms_form_a_group_on_six_vertices(r):
    images = {p.images for p in automorphisms(r)}
    for p in images:
        assert tuple(p.index(i) for i in range(6)) in images
        for q in images:
            assert tuple(p[q[i]] for i in range(6)) in images


@settings(max_examples=150, deadline=None)
@given(relations(max_n=5))
def test_hereditary_witness_is_least_failing_subset(r):
    failing = [
        subset
        for size in range(2, r.n + 1)
        for subset in combinations(range(r.n), size)
        if len(brute_force_automorphisms(induced_substructure(r, subset))) > 1
    ]
    verdict = is_hereditarily_rigid(r)
    if failing:
        assert verdict.witness_subset == min(failing)
    else:
        assert verdict.positive
