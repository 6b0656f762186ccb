import random

import pytest
from qgcontract.scalar import H  # type: ignore
from qgcontract.freealg import (  # type: ignore
    DegreeBoundExceeded,
    FreeElement,
    NonConfluent,
    RewriteSystem,
    Rule,
    check_confluence,
    enumerate_words,
    reduce,
    require_confluent,
)


@pytest.fixture
def gens():
    return FreeElement.generator("a"), FreeElement.generator("b")


@pytest.fixture
def split_system(gens):
    a, b = gens
    return RewriteSystem(
        [Rule(("b", "a"), a * b + a), Rule(("b", "b"), a * a)], ["a", "b"]
    )


def test_rules_must_decrease_the_order(gens):
    a, b = gens
    with pytest.raises(ValueError):
        RewriteSystem([Rule(("a", "b"), b * a)], ["a", "b"])
    with pytest.raises(ValueError):
        RewriteSystem([Rule((), a)], ["a", "b"])
    with pytest.raises(ValueError):
        RewriteSystem([], ["a", "a"])


def test_duplicate_rule(gens):
    a, b = gens
    with pytest.raises(ValueError):
        RewriteSystem(
            [Rule(("b", "a"), a * b), Rule(("b", "a"), a * b + a)], ["a", "b"]
        )


def test_reduce_to_normal_form(split_system, gens):
    a, b = gens
    assert reduce(b * a, split_system) == a * b + a
    assert split_system.reduce(a * b) == a * b
    assert split_system.is_normal(("a", "b"))
    assert not split_system.is_normal(("b", "a"))
    assert split_system.redexes(("b", "b", "a")) == [0, 1]


def test_rewrite_at(split_system, gens):
    a, b = gens
    assert split_system.rewrite_at(("b", "b", "a"), 0) == a * a * a
    with pytest.raises(ValueError):
        split_system.rewrite_at(("a", "b"), 0)


def test_degree_bound(split_system, gens):
    a, b = gens
    bounded = split_system.with_max_degree(3)
    with pytest.raises(DegreeBoundExceeded):
        bounded.reduce(b * b * b * a)


def test_confluence_witness(split_system):
    report = check_confluence(split_system, 3)
    assert not report.passed
    witness = report["confluence"].witness
    assert witness["word"] == "b b a"
    assert witness["positions"] == [0, 1]
    with pytest.raises(NonConfluent):
        require_confluent(split_system, 3)


def test_commutative_system_is_confluent(gens):
    a, b = gens
    rs = RewriteSystem.from_relations([b * a - a * b], ["a", "b"])
    assert rs.rules == {("b", "a"): a * b}
    assert require_confluent(rs, 4) is rs
    with pytest.raises(ValueError):
        check_confluence(rs, 1)


def test_from_relations_orients_by_leading_word(gens):
    a, b = gens
    rs = RewriteSystem.from_relations(
        [a * b - b * a - H * (a * a)], ["a", "b"]
    )
    assert len(rs) == 1
    assert rs.reduce(b * a) == a * b - H * (a * a)


def test_from_relations_rejects_collapsing_generators(gens):
    a, b = gens
    with pytest.raises(ValueError):
        RewriteSystem.from_relations([b - a], ["a", "b"])
    with pytest.raises(ValueError):
        RewriteSystem.from_relations([FreeElement.generator("c") * a], ["a", "b"])


def test_union_adds_commutation(gens):
    a, b = gens
    first = RewriteSystem([], ["a"])
    second = RewriteSystem([], ["b"])
    rs = first.union(second)
    assert rs.generators == ("a", "b")
    assert rs.reduce(b * a) == a * b
    assert len(first.union(second, commuting=False)) == 0


def test_subs_h(gens):
    a, b = gens
    rs = RewriteSystem([Rule(("b", "a"), a * b + H * a)], ["a", "b"])
    assert rs.subs_h(0) == RewriteSystem([Rule(("b", "a"), a * b)], ["a", "b"])


def test_enumerate_words():
    words = list(enumerate_words(["a", "b"], 2))
    assert len(words) == 6
    assert words[0] == ("a",)
    assert words[-1] == ("b", "b")


@pytest.mark.parametrize("seed", range(4))
def test_reduction_is_idempotent(tilde_system, seed):
    rng = random.Random(seed)
    words = list(enumerate_words(tilde_system.generators, 3))
    element = FreeElement.zero()
    for word in rng.sample(words, 6):
        coeff = rng.randint(-3, 3) + rng.randint(0, 2) * H
        element = element + coeff * FreeElement.word(*word)
    normal = reduce(element, tilde_system)
    assert reduce(normal, tilde_system) == normal
    assert all(not tilde_system.redexes(word) for word in normal.words())
