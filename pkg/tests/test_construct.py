import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from src.construct.models import CantorPoint, LabeledPair, SpineDesignation
from src.construct.service import (
    cantor_relation,
    find_inseparable_pair,
    minimal_chain_length,
    neighborhood_signature,
    ordinal_relation,
    points_of,
    prefix_code,
    prefix_enumeration,
    product_relation_lex,
    product_relation_main,
    rigid_linear_order,
    separation_check,
    spine_fixed_by_automorphisms,
    transfer_relation,
)
from src.core.models import Permutation, Relation
from src.core.service import automorphism_count, is_hereditarily_rigid, is_rigid, is_strongly_rigid
from src.exceptions import (
    ConstructionPreconditionError,
    HypothesisViolationError,
    InvalidArgumentError,
)
from tests.strategies import (
    cantor_instances,
    product_lex_instances,
    product_main_instances,
    relation_with_permutation,
)

CARRIER_BOUND = 12


def pairs_of(*items: tuple[str, int]) -> list[LabeledPair]:
    return [LabeledPair(point=CantorPoint(bits=bits), label=label) for bits, label in items]


# -------- linear orders and ordinals --------

def test_rigid_linear_order():
    assert rigid_linear_order(0) == Relation.empty(0)
    assert rigid_linear_order(3).edges == ((0, 1), (0, 2), (1, 2))
    assert is_hereditarily_rigid(rigid_linear_order(4)).positive
    with pytest.raises(InvalidArgumentError):
        rigid_linear_order(-1)


@pytest.mark.parametrize("n", range(8))
def test_finite_linear_orders_are_strongly_rigid(n):
    assert is_strongly_rigid(rigid_linear_order(n)).positive


def test_ordinal_relation():
    assert ordinal_relation(0) == Relation.empty(0)
    assert ordinal_relation(1) == Relation.empty(1)
    assert ordinal_relation(3).edges == ((0, 1), (0, 2), (1, 2))
    assert is_hereditarily_rigid(ordinal_relation(5)).positive


# -------- prefixes --------

def test_prefix_enumeration():
    assert [c.sequence for c in prefix_enumeration(1)] == [""]
    assert [c.sequence for c in prefix_enumeration(4)] == ["", "0", "1", "00"]
    assert [c.sequence for c in prefix_enumeration(7)][-1] == "11"
    assert prefix_code(14) == "111"
    assert prefix_enumeration(0) == []


def test_neighborhood_signature():
    point = CantorPoint(bits="01")
    assert neighborhood_signature(point, 5) == (True, True, False, False, True)


def test_cantor_point_rejects_non_binary():
    with pytest.raises(ValidationError):
        CantorPoint(bits="012")
    with pytest.raises(InvalidArgumentError):
        points_of(["0", ""])


# -------- separation --------

def test_separation_check():
    assert separation_check([], 0)
    assert separation_check(points_of(["0"]), 0)
    assert not separation_check(points_of(["00", "01"]), 2)
    assert separation_check(points_of(["00", "01"]), 4)


def test_find_inseparable_pair():
    a, b = points_of(["00", "01"])
    assert find_inseparable_pair([a, b], 3) == (a, b)
    assert find_inseparable_pair([a, b], 4) is None


def test_minimal_chain_length():
    assert minimal_chain_length(points_of(["00", "01"])) == 4
    assert minimal_chain_length(points_of(["0", "1"])) == 2
    assert minimal_chain_length(points_of(["10"])) == 0


def test_duplicate_points_are_rejected():
    with pytest.raises(InvalidArgumentError, match="not pairwise distinct"):
        separation_check(points_of(["01", "01"]), 3)
    with pytest.raises(InvalidArgumentError):
        minimal_chain_length(points_of(["1", "1"]))


# -------- cantor relation --------

def test_cantor_relation_example():
    points = points_of(["00", "01", "10", "11"])
    r = cantor_relation(points, SpineDesignation(z_star=0, z_chain=(1, 2)))
    assert r.edge_set == {(0, 0), (1, 0), (2, 0), (1, 2), (1, 3)}
    assert is_rigid(r).positive


def test_cantor_relation_spine_only():
    points = points_of(["00", "01", "10"])
    r = cantor_relation(points, SpineDesignation(z_star=1, z_chain=(0, 2)))
    assert r.edge_set == {(1, 1), (0, 1), (2, 1), (0, 2)}
    assert is_rigid(r).positive


def test_cantor_relation_needs_separated_points():
    points = points_of(["000", "001", "010", "011"])
    with pytest.raises(ConstructionPreconditionError, match="010 and 011"):
        cantor_relation(points, SpineDesignation(z_star=0, z_chain=(1,)))


def test_cantor_relation_rejects_bad_spine():
    points = points_of(["00", "01"])
    with pytest.raises(InvalidArgumentError, match="outside carrier"):
        cantor_relation(points, SpineDesignation(z_star=0, z_chain=(7,)))
    with pytest.raises(ValidationError):
        SpineDesignation(z_star=0, z_chain=(1, 0))


def test_cantor_relation_rejects_mixed_lengths():
    with pytest.raises(InvalidArgumentError, match="bit length"):
        cantor_relation(points_of(["0", "01"]), SpineDesignation(z_star=0, z_chain=(1,)))


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(cantor_instances(max_points=CARRIER_BOUND))
def test_cantor_relations_are_rigid(instance):
    points, spine = instance
    r = cantor_relation(points, spine)
    assert is_rigid(r, max_n=CARRIER_BOUND).positive
    loops = [u for u, v in r.edges if u == v]
    assert loops == [spine.z_star]


@settings(max_examples=100, deadline=None)
@given(cantor_instances(max_points=8))
def test_cantor_spine_is_fixed(instance):
    points, spine = instance
    r = cantor_relation(points, spine)
    assert spine_fixed_by_automorphisms(r, spine)


# -------- product relations --------

def test_product_relation_main_example():
    pairs = pairs_of(("00", 0), ("01", 0), ("10", 0), ("11", 0), ("11", 1))
    base = rigid_linear_order(2)
    r = product_relation_main(pairs, base, SpineDesignation(z_star=0, z_chain=(1, 2)))
    assert r.edge_set == {(0, 0), (1, 0), (2, 0), (1, 2), (1, 3), (1, 4), (3, 4)}
    assert is_rigid(r).positive


def test_product_relation_main_rejects_loopy_base():
    pairs = pairs_of(("0", 0), ("1", 0))
    base = Relation.of(2, [(0, 0), (0, 1)])
    with pytest.raises(HypothesisViolationError, match="irreflexive"):
        product_relation_main(pairs, base, SpineDesignation(z_star=0, z_chain=(1,)))


def test_product_relation_main_rejects_non_hereditary_base():
    pairs = pairs_of(("0", 0), ("1", 0))
    with pytest.raises(HypothesisViolationError, match="hereditarily rigid"):
        product_relation_main(pairs, Relation.empty(2), SpineDesignation(z_star=0, z_chain=(1,)))


def test_product_relation_main_unsafe_skips_hypothesis():
    pairs = pairs_of(("0", 0), ("1", 0))
    r = product_relation_main(pairs, Relation.empty(2), SpineDesignation(z_star=0, z_chain=(1,)),
                              check_hypothesis=False)
    assert r.edge_set == {(0, 0), (1, 0)}


def test_product_relation_validates_pairs():
    base = rigid_linear_order(2)
    with pytest.raises(InvalidArgumentError, match="label 2"):
        product_relation_lex(pairs_of(("0", 2)), base)
    with pytest.raises(InvalidArgumentError, match="not pairwise distinct"):
        product_relation_lex(pairs_of(("0", 1), ("0", 1)), base)


def test_product_relation_lex_is_linear_order():
    pairs = pairs_of(("0", 0), ("0", 1), ("1", 0), ("1", 1))
    r = product_relation_lex(pairs, rigid_linear_order(2))
    assert r == rigid_linear_order(4)
    assert is_rigid(r).positive


def test_product_relation_lex_single_point_copies_base():
    base = rigid_linear_order(3)
    r = product_relation_lex(pairs_of(("1", 0), ("1", 1), ("1", 2)), base)
    assert r == base


def test_product_relation_lex_needs_hereditary_base():
    pairs = pairs_of(("0", 0), ("0", 1))
    r = product_relation_lex(pairs, Relation.empty(2), check_hypothesis=False)
    assert not is_rigid(r).positive
    with pytest.raises(HypothesisViolationError):
        product_relation_lex(pairs, Relation.empty(2))


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(product_main_instances(max_points=CARRIER_BOUND))
def test_product_main_relations_are_rigid(instance):
    pairs, base, spine = instance
    r = product_relation_main(pairs, base, spine)
    assert is_rigid(r, max_n=CARRIER_BOUND).positive


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(product_lex_instances(max_pairs=CARRIER_BOUND))
def test_product_lex_relations_are_rigid(instance):
    pairs, base = instance
    r = product_relation_lex(pairs, base)
    assert is_rigid(r, max_n=CARRIER_BOUND).positive


@settings(max_examples=100, deadline=None)
@given(product_lex_instances(max_pairs=8))
def test_product_lex_relations_are_rigid_quick(instance):
    pairs, base = instance
    assert is_rigid(product_relation_lex(pairs, base)).positive


# -------- transfer --------

def test_transfer_relation():
    r = rigid_linear_order(3)
    assert transfer_relation(r, Permutation.identity(3)) == r
    reversed_order = transfer_relation(r, Permutation.of([2, 1, 0]))
    assert reversed_order.edges == ((1, 0), (2, 0), (2, 1))
    assert is_rigid(reversed_order).positive


def test_transfer_relation_size_mismatch():
    with pytest.raises(InvalidArgumentError):
        transfer_relation(rigid_linear_order(3), Permutation.identity(2))


@settings(max_examples=200, deadline=None)
@given(relation_with_permutation(max_n=5))
def test_transfer_preserves_automorphism_count(case):
    r, p = case
    assert automorphism_count(transfer_relation(r, p)) == automorphism_count(r)


@settings(max_examples=200, deadline=None)
@given(product_lex_instances(max_pairs=8))
def test_product_lex_over_linear_order_is_linear_order(instance):
    pairs, _ = instance
    distinct = list({p.point: p for p in pairs}.values())
    m = max(p.label for p in distinct) + 1
    r = product_relation_lex(distinct, rigid_linear_order(m))
    rank = {i: sorted(distinct, key=lambda p: p.point.bits).index(p) for i, p in enumerate(distinct)}
    expected = Relation.of(len(distinct), [(a, b) for a in rank for b in rank if rank[a] < rank[b]])
    assert r == expected
