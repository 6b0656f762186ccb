import pytest
from qgcontract.tensor import RingMatrix  # type: ignore
from qgcontract.qgroup import r_jordanian, r_standard  # type: ignore
from qgcontract.freealg import (  # type: ignore
    FreeElement,
    check_confluence,
    counit_check,
    rtt_generators,
    rtt_relations,
    rtt_system,
)


def test_generator_order():
    assert rtt_generators(2) == ["T21", "T11", "T22", "T12"]
    assert rtt_generators(2, "Ts") == ["Ts21", "Ts11", "Ts22", "Ts12"]


@pytest.mark.parametrize(
    "R",
    [
        RingMatrix.identity(4, (2, 2)),
        r_jordanian(2),
        r_standard(2),
    ],
    ids=["identity", "jordanian", "standard"],
)
def test_rtt_rank_n2(R):
    rs = rtt_system(R, 2)
    assert len(rs) == 6
    assert check_confluence(rs, 3).passed


def test_identity_gives_commuting_generators():
    rs = rtt_system(RingMatrix.identity(4, (2, 2)), 2)
    t11 = FreeElement.generator("T11")
    t12 = FreeElement.generator("T12")
    assert rs.reduce(t12 * t11) == t11 * t12


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        rtt_relations(r_jordanian(2), 3)


def test_counit():
    assert counit_check(rtt_relations(r_jordanian(2), 2), 2).passed
    assert counit_check(rtt_relations(r_standard(2), 2), 2).passed
    bad = [FreeElement.generator("T11") - FreeElement.unit() * 2]
    result = counit_check(bad, 2)
    assert not result.passed
    assert result.witness["relation"] == 0
