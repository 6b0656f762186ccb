import pytest
from qgcontract.scalar import H  # type: ignore
from qgcontract.qgroup import c_metric_closed_form, perturb, r_jordanian  # type: ignore
from qgcontract.freealg import (  # type: ignore
    FreeElement,
    boson_generators,
    boson_relations,
    check_confluence,
    creator_system,
    expand_components,
    generator_name,
    metric_link_check,
    second_set_check,
    system_difference,
    trivial_factor,
)


def g(name):
    return FreeElement.generator(name)


@pytest.fixture(scope="module")
def jordanian_data():
    one = trivial_factor()
    return r_jordanian(2), one, c_metric_closed_form(2), one


def test_generator_names():
    assert generator_name("Ap", 2, 1, 1) == "Ap2"
    assert generator_name("Ap", 2, 1, 2) == "Ap21"
    assert boson_generators(2, 1, "tilde") == ["Ap1", "Ap2", "At1", "At2"]
    assert boson_generators(2, 1, "plain") == ["Ap1", "Ap2", "A2", "A1"]
    assert boson_generators(2, 2, "tilde")[:4] == ["Ap11", "Ap12", "Ap21", "Ap22"]
    with pytest.raises(ValueError):
        boson_generators(2, 1, "mixed")


def test_creator_rule(jordanian_data):
    R, calR, _, _ = jordanian_data
    rs = creator_system(R, calR)
    assert len(rs) == 1
    assert rs.reduce(g("Ap2") * g("Ap1")) == g("Ap1") * g("Ap2") - H * (
        g("Ap1") * g("Ap1")
    )


def test_tilde_system_rules(tilde_system):
    assert tilde_system.reduce(g("At1") * g("Ap1")) == g("Ap1") * g("At1")
    assert tilde_system.reduce(g("At1") * g("Ap2")) == (
        g("Ap2") * g("At1") + 1 + H * (g("Ap1") * g("At1"))
    )
    assert tilde_system.reduce(g("At2") * g("At1")) == g("At1") * g("At2") - H * (
        g("At1") * g("At1")
    )


@pytest.mark.parametrize("form", ["tilde", "plain"])
def test_systems_are_confluent(jordanian_data, form):
    rs = boson_relations(*jordanian_data, form, confluence_degree=None)
    assert check_confluence(rs, 3).passed


@pytest.mark.parametrize("form", ["tilde", "plain"])
def test_second_set(jordanian_data, form):
    result = second_set_check(*jordanian_data, form)
    assert result.passed, result.witness
    assert result.identity == f"second-set:{form}"


def test_metric_link(jordanian_data, tilde_system):
    assert metric_link_check(*jordanian_data, tilde_system).passed
    assert metric_link_check(*jordanian_data).passed


def test_metric_link_detects_wrong_metric(jordanian_data, tilde_system):
    R, calR, C, calC = jordanian_data
    result = metric_link_check(R, calR, perturb(C, 2, 2), calC, tilde_system)
    assert not result.passed


def test_system_difference(jordanian_data, tilde_system):
    assert system_difference(tilde_system, tilde_system) is None
    classical = tilde_system.subs_h(0)
    difference = system_difference(tilde_system, classical)
    assert difference is not None
    assert set(difference) == {"lhs", "first", "second"}


def test_unknown_form(jordanian_data):
    with pytest.raises(ValueError):
        expand_components(*jordanian_data, "mixed")


def test_double_spinor_system_is_confluent():
    R = r_jordanian(2)
    C = c_metric_closed_form(2)
    rs = boson_relations(R, R, C, C, "tilde")
    assert len(boson_generators(2, 2, "tilde")) == len(rs.generators) == 8
