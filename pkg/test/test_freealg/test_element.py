from fractions import Fraction

import pytest
from qgcontract.scalar import H, ONE, ZERO  # type: ignore
from qgcontract.tensor import RingMatrix  # type: ignore
from qgcontract.freealg import FreeElement, format_word  # type: ignore


@pytest.fixture
def gens():
    return FreeElement.generator("a"), FreeElement.generator("b")


def test_zero_coefficients_are_dropped(gens):
    a, b = gens
    x = a + b - a
    assert x == b
    assert len(x) == 1
    assert not (a - a)
    assert (a - a).is_zero()


def test_generator_names():
    with pytest.raises(ValueError):
        FreeElement.generator("I")
    with pytest.raises(ValueError):
        FreeElement.generator("")


def test_products_concatenate_words(gens):
    a, b = gens
    x = (a + b) * (a - b)
    assert x.coefficient(("a", "a")) == 1
    assert x.coefficient(("a", "b")) == -1
    assert x.coefficient(("b", "a")) == 1
    assert x.coefficient(("b", "b")) == -1
    assert x.degree == 2
    assert x.generators() == {"a", "b"}


def test_scalars_and_unit(gens):
    a, _ = gens
    assert FreeElement.unit() * 3 == 3
    assert (H * a).coefficient(("a",)) == H
    assert (a * Fraction(1, 2)).coefficient(("a",)) == Fraction(1, 2)
    assert (1 - a).coefficient(()) == ONE
    assert FreeElement.zero().degree == 0
    with pytest.raises(TypeError):
        a * 1.5


def test_power(gens):
    a, b = gens
    assert len((a + b) ** 2) == 4
    assert a**0 == FreeElement.unit()
    with pytest.raises(ValueError):
        a**-1


def test_rendering(gens):
    a, b = gens
    assert str(FreeElement.zero()) == "0"
    assert str(-a) == "-a"
    assert str(a * b - 2) == "(-2)*I + a b"
    assert format_word(()) == "I"
    assert format_word(("a", "b")) == "a b"


def test_substitute_is_multiplicative(gens):
    a, b = gens
    x = a * b - b * a
    image = x.substitute({"a": b + a})
    assert image == (b + a) * b - b * (b + a)
    # generators without an image are kept
    assert x.substitute({}) == x


def test_subs_h(gens):
    a, b = gens
    x = a * b - H * (b * a)
    assert x.subs_h(0) == a * b
    assert x.subs_h(2).coefficient(("b", "a")) == -2


def test_evaluate_on_matrices(gens):
    a, b = gens
    ops = {
        "a": RingMatrix([[0, 1], [0, 0]]),
        "b": RingMatrix([[0, 0], [1, 0]]),
    }
    identity = RingMatrix.identity(2)
    commutator = (a * b - b * a).evaluate(ops, identity)
    assert commutator == RingMatrix([[1, 0], [0, -1]])
    assert FreeElement.unit().evaluate(ops, identity) == identity
    assert FreeElement.zero().evaluate(ops, identity) == RingMatrix.zeros(2)
    with pytest.raises(KeyError):
        FreeElement.generator("c").evaluate(ops, identity)


def test_sorted_terms_shortest_first(gens):
    a, b = gens
    x = b * a + a + 5
    words = [word for word, _ in x.sorted_terms()]
    assert words == [(), ("a",), ("b", "a")]
    assert x.coefficient(("a", "a")) == ZERO
