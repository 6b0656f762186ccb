import pytest
from qgcontract.qgroup import c_metric_closed_form, perturb  # type: ignore
from qgcontract.oscillator import (  # type: ignore
    FAMILIES,
    build_h_spinors,
    build_weyl,
    hardcoded_relations,
    plain_set,
    tilde_set,
    verify_expanded,
    verify_relations,
    verify_rform_match,
    verify_soundness,
)


def test_relation_families():
    families = hardcoded_relations()
    assert tuple(families) == FAMILIES
    assert len(plain_set()) == 6
    assert len(tilde_set()) == 6


@pytest.mark.parametrize("family", FAMILIES)
def test_relations_hold_with_formal_h(fock6, family):
    report = verify_relations(fock6, family)
    assert report.passed, [check.witness for check in report.failures()]


@pytest.mark.parametrize("family", FAMILIES)
def test_relations_hold_at_h_zero(family):
    rep = build_h_spinors(build_weyl(2, 5), h_value=0)
    assert verify_relations(rep, family, h_value=0).passed


def test_unknown_family(fock6):
    with pytest.raises(ValueError):
        verify_relations(fock6, "creation")


def test_wrong_metric_breaks_mixed_plain():
    metric = perturb(c_metric_closed_form(2), 2, 2)
    rep = build_h_spinors(build_weyl(2, 6), metric=metric)
    report = verify_relations(rep, "mixed_plain")
    assert not report.passed
    assert set(report.failures()[0].witness) == {"row", "col", "value"}
    # the tilde operators do not involve the metric
    assert verify_relations(rep, "mixed_tilde").passed


@pytest.mark.parametrize("form", ["plain", "tilde"])
def test_expanded_relations_hold(fock6, form):
    result = verify_expanded(fock6, form)
    assert result.passed, result.witness


def test_rform_match():
    report = verify_rform_match()
    assert report.passed
    assert [check.identity for check in report] == ["rform:plain", "rform:tilde"]


def test_soundness(fock6, tilde_system):
    result = verify_soundness(tilde_system, fock6, 3)
    assert result.passed, result.witness


def test_soundness_detects_classical_rules(fock6, tilde_system):
    result = verify_soundness(tilde_system.subs_h(0), fock6, 2, identity="classical")
    assert not result.passed
    assert result.identity == "classical"
    assert "normal_form" in result.witness


@pytest.mark.parametrize("D", [4, 5, 6, 7, 8])
def test_relations_hold_for_each_truncation(D):
    rep = build_h_spinors(build_weyl(2, D))
    for family in FAMILIES:
        report = verify_relations(rep, family)
        assert report.passed, (family, [check.witness for check in report.failures()])
