from fractions import Fraction
import random

import pytest
from qgcontract.scalar import (  # type: ignore
    ETA,
    H,
    ONE,
    Q,
    S,
    SQRT2,
    ZERO,
    DivisionByZero,
    NonPolynomialError,
    PoleError,
    ScalarQH,
    limit_q_to_1,
    ring_arithmetic,
    s_power,
    substitute_h_zero,
)


@pytest.mark.parametrize(
    "value, expected",
    [
        (Q, "s^2"),
        (-H, "-h"),
        (H * H, "h^2"),
        (ETA, "h/(s^2 - 1)"),
        (ScalarQH(1, 2), "1/2"),
        (ZERO, "0"),
        (s_power(-1), "1/s"),
    ],
)
def test_canonical_rendering(value, expected):
    assert str(value) == expected


def test_canonical_form_cancels_common_factors():
    value = (Q - 1) / (S - 1)
    assert value == S + 1
    assert str(value) == "s + 1"


def test_equality_across_representations():
    assert ETA * (Q - 1) == H
    assert ScalarQH(2, 4) == Fraction(1, 2)
    assert H != H + 1
    assert ZERO == 0


def test_field_arithmetic():
    assert (H + Q) - Q == H
    assert Q * Q.inverse() == ONE
    assert (S / H) * (H / S) == 1
    assert s_power(-2) == Q.inverse()
    assert s_power(3) == S * Q
    assert H**-2 == ONE / (H * H)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    # builtin base class
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_non_scalar_operand():
    with pytest.raises(TypeError):
        ScalarQH(1.5)
    with pytest.raises(TypeError):
        H + 1.5


def test_sqrt2_extension():
    assert SQRT2 * SQRT2 == 2
    assert SQRT2.inverse() == SQRT2 * Fraction(1, 2)
    assert (1 + SQRT2) * (SQRT2 - 1) == 1
    assert SQRT2.has_radical
    assert str(SQRT2) == "sqrt2*(1)"
    assert SQRT2 != 1


def test_limit_of_removable_pole():
    # eta (s - 1) = h / (s + 1)
    assert limit_q_to_1(ETA * (S - 1)) == H * Fraction(1, 2)
    assert limit_q_to_1(Q - Q.inverse()) == ZERO
    assert limit_q_to_1(ZERO) == ZERO


def test_limit_errors():
    with pytest.raises(PoleError):
        limit_q_to_1(ETA)
    with pytest.raises(NonPolynomialError):
        limit_q_to_1(ONE / (H + 1))


def test_polynomial_helpers():
    p = H**3 + H * 2 + 5
    assert p.is_polyh()
    assert p.h_degree() == 3
    assert p.coeff_h(1) == 2
    assert p.coeff_h(2) == 0
    assert substitute_h_zero(p) == 5
    assert p.subs_h(2) == 17
    assert not ETA.is_polyh()
    assert ETA.has_pole_at_one()
    assert not H.has_pole_at_one()
    with pytest.raises(ValueError):
        ETA.h_degree()


def test_subs_h_with_vanishing_denominator():
    with pytest.raises(DivisionByZero):
        (ONE / H).subs_h(0)


@pytest.mark.parametrize(
    "op, expected",
    [
        ("add", H + Q),
        ("sub", H - Q),
        ("mul", H * Q),
        ("div", H / Q),
    ],
)
def test_ring_arithmetic(op, expected):
    assert ring_arithmetic(H, Q, op) == expected


def test_ring_arithmetic_unknown_operation():
    with pytest.raises(ValueError):
        ring_arithmetic(H, Q, "pow")


def test_latex_rendering():
    assert ETA.to_latex() == r"\frac{h}{s^{2} - 1}"
    assert (H * H).to_latex() == "h^{2}"
    assert ScalarQH(-1, 2).to_latex() == r"-\frac{1}{2}"


def random_poly(rng: random.Random, degree: int = 2) -> ScalarQH:
    value = ZERO
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            value = value + coeff * S**i * H**j
    return value


def random_scalar(rng: random.Random, radical: bool = False) -> ScalarQH:
    den = random_poly(rng, 1)
    value = random_poly(rng) / (den if den else ONE)
    if radical:
        value = value + SQRT2 * random_poly(rng, 1)
    return value


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("radical", [False, True])
def test_field_axioms_on_random_values(seed, radical):
    rng = random.Random(seed)
    a, b, c = (random_scalar(rng, radical) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a + ZERO == a
    assert a * ONE == a
    for x in (a, b, c):
        if x:
            assert x * x.inverse() == ONE
            assert (a / x) * x == a


@pytest.mark.parametrize("seed", range(5))
def test_limit_is_linear_and_multiplicative(seed):
    rng = random.Random(seed)
    # denominators s + k stay finite and h-free at s = 1
    a = random_poly(rng) / (S + rng.randint(1, 3))
    b = random_poly(rng) / (S + rng.randint(1, 3))
    c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    assert limit_q_to_1(a + b) == limit_q_to_1(a) + limit_q_to_1(b)
    assert limit_q_to_1(a * b) == limit_q_to_1(a) * limit_q_to_1(b)
    assert limit_q_to_1(c * a) == c * limit_q_to_1(a)
    assert limit_q_to_1(a).is_polyh()


def test_hash_agrees_with_equality():
    assert hash(ScalarQH(1)) == hash(1)
    assert hash(ScalarQH(0)) == hash(0)
    assert hash(ScalarQH(3, 6)) == hash(Fraction(1, 2))
    assert hash((Q - 1) / (S - 1)) == hash(S + 1)
    assert len({ScalarQH(2), 2, Fraction(4, 2)}) == 1
    assert len({H, H + 0, S}) == 2
