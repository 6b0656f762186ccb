"""
Exchange relations of the two-mode h-deformed boson algebra and their
verification on the truncated representation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from ..freealg import (
    FreeElement,
    RewriteSystem,
    Word,
    boson_generators,
    enumerate_words,
    expand_components,
    format_word,
    system_difference,
    trivial_factor,
)
from ..prog.report import CheckReport, CheckResult
from ..qgroup import c_metric_closed_form, r_jordanian
from ..scalar import H
from ..tensor import RingMatrix
from .fock import FockRep

Family = Literal["creation_pair", "annihilation_pair", "mixed_tilde", "mixed_plain"]
FAMILIES: tuple[Family, ...] = (
    "creation_pair",
    "annihilation_pair",
    "mixed_tilde",
    "mixed_plain",
)


def _w(*names: str) -> FreeElement:
    return FreeElement.word(*names)


def hardcoded_relations() -> dict[Family, dict[str, FreeElement]]:
    """
    Relations of the n = 2, m = 1 algebra written out by hand, each as an
    element that must vanish.
    """
    unit = FreeElement.unit()
    h = H
    return {
        "creation_pair": {
            "[Ap1,Ap2] = h Ap1^2": _w("Ap1", "Ap2") - _w("Ap2", "Ap1")
            - h * _w("Ap1", "Ap1"),
        },
        "annihilation_pair": {
            "[A1,A2] = h A2^2": _w("A1", "A2") - _w("A2", "A1") - h * _w("A2", "A2"),
            "[At1,At2] = h At1^2": _w("At1", "At2") - _w("At2", "At1")
            - h * _w("At1", "At1"),
        },
        "mixed_tilde": {
            "[At1,Ap1] = 0": _w("At1", "Ap1") - _w("Ap1", "At1"),
            "[At2,Ap2] = h(I - Ap1 At2 + Ap2 At1 + h Ap1 At1)": _w("At2", "Ap2")
            - _w("Ap2", "At2")
            - h * (unit - _w("Ap1", "At2") + _w("Ap2", "At1") + h * _w("Ap1", "At1")),
            "[At1,Ap2] = I + h Ap1 At1": _w("At1", "Ap2") - _w("Ap2", "At1") - unit
            - h * _w("Ap1", "At1"),
            "[At2,Ap1] = -I - h Ap1 At1": _w("At2", "Ap1") - _w("Ap1", "At2") + unit
            + h * _w("Ap1", "At1"),
        },
        "mixed_plain": {
            "[A2,Ap1] = 0": _w("A2", "Ap1") - _w("Ap1", "A2"),
            "[A1,Ap2] = h(-Ap1 A1 - Ap2 A2 + h Ap1 A2)": _w("A1", "Ap2")
            - _w("Ap2", "A1")
            - h * (-_w("Ap1", "A1") - _w("Ap2", "A2") + h * _w("Ap1", "A2")),
            "[A1,Ap1] = I + h Ap1 A2": _w("A1", "Ap1") - _w("Ap1", "A1") - unit
            - h * _w("Ap1", "A2"),
            "[A2,Ap2] = I + h Ap1 A2": _w("A2", "Ap2") - _w("Ap2", "A2") - unit
            - h * _w("Ap1", "A2"),
        },
    }


def plain_set() -> list[FreeElement]:
    families = hardcoded_relations()
    return [
        families["creation_pair"]["[Ap1,Ap2] = h Ap1^2"],
        families["annihilation_pair"]["[A1,A2] = h A2^2"],
        *families["mixed_plain"].values(),
    ]


def tilde_set() -> list[FreeElement]:
    families = hardcoded_relations()
    return [
        families["creation_pair"]["[Ap1,Ap2] = h Ap1^2"],
        families["annihilation_pair"]["[At1,At2] = h At1^2"],
        *families["mixed_tilde"].values(),
    ]


def column_difference(
    M: RingMatrix, columns: list[int]
) -> tuple[int, int, str] | None:
    """
    First nonzero entry of M within the given columns, 1-based.
    """
    for col in columns:
        for row in range(M.dim):
            value = M[row, col]
            if value:
                return row + 1, col + 1, str(value)
    return None


def _vanishes_on(
    element: FreeElement,
    rep: FockRep,
    columns: list[int],
    cache: dict[Word, RingMatrix],
) -> tuple[int, int, str] | None:
    return column_difference(element.evaluate(rep.ops, rep.identity, cache), columns)


def verify_relations(
    rep: FockRep, which: Family, h_value: int | Fraction | None = None
) -> CheckReport:
    """
    Evaluate one family of relations as matrix equations on the states of
    degree <= D - 2.

    Arguments:
        rep (FockRep): Representation with the spinor operators built.
        which (Family): Relation family.
        h_value (int | Fraction | None): Value of h used when ``rep`` was
            built numerically; None for formal h.
    """
    families = hardcoded_relations()
    if which not in families:
        raise ValueError(f"Unknown relation family '{which}'. Choose from {FAMILIES}.")
    columns = rep.columns_up_to(rep.safe_degree)
    cache: dict[Word, RingMatrix] = {}
    report = CheckReport()
    for name, element in families[which].items():
        if h_value is not None:
            element = element.subs_h(h_value)
        difference = _vanishes_on(element, rep, columns, cache)
        report.add(CheckResult.from_difference(f"{which}:{name}", difference))
    return report


def verify_expanded(
    rep: FockRep,
    form: Literal["plain", "tilde"],
    R: RingMatrix | None = None,
    C: RingMatrix | None = None,
) -> CheckResult:
    """
    The component relations generated from (R, C) hold on the representation.
    """
    R = r_jordanian(2) if R is None else R
    C = c_metric_closed_form(2) if C is None else C
    one = trivial_factor()
    columns = rep.columns_up_to(rep.safe_degree)
    cache: dict[Word, RingMatrix] = {}
    for element in expand_components(R, one, C, one, form):
        difference = _vanishes_on(element, rep, columns, cache)
        if difference is not None:
            row, col, value = difference
            return CheckResult(
                f"expanded:{form}",
                False,
                {"relation": str(element), "row": row, "col": col, "value": value},
            )
    return CheckResult(f"expanded:{form}", True)


def verify_rform_match(
    R: RingMatrix | None = None, C: RingMatrix | None = None
) -> CheckReport:
    """
    Expanding the matrix relations with the Jordanian data regenerates the
    hand-written relation sets: both span the same space, compared through
    their reduced rule systems.
    """
    R = r_jordanian(2) if R is None else R
    C = c_metric_closed_form(2) if C is None else C
    one = trivial_factor()
    report = CheckReport()
    for form, hardcoded in (("plain", plain_set()), ("tilde", tilde_set())):
        generators = boson_generators(2, 1, form)
        expanded = RewriteSystem.from_relations(
            expand_components(R, one, C, one, form), generators
        )
        written = RewriteSystem.from_relations(hardcoded, generators)
        difference = system_difference(expanded, written)
        if difference is None:
            report.add(CheckResult(f"rform:{form}", True))
        else:
            report.add(CheckResult(f"rform:{form}", False, difference))
    return report


def verify_soundness(
    rs: RewriteSystem, rep: FockRep, degree: int = 3, identity: str = "soundness"
) -> CheckResult:
    """
    For every word up to ``degree``, its normal form and the word itself
    act identically on states of degree <= D - len(word).
    """
    cache: dict[Word, RingMatrix] = {}
    for word in enumerate_words(rs.generators, degree):
        columns = rep.columns_up_to(rep.max_degree - len(word))
        element = FreeElement.word(*word)
        normal = rs.reduce(element)
        difference = _vanishes_on(element - normal, rep, columns, cache)
        if difference is not None:
            row, col, value = difference
            return CheckResult(
                identity,
                False,
                {
                    "word": format_word(word),
                    "normal_form": str(normal),
                    "row": row,
                    "col": col,
                    "value": value,
                },
            )
    return CheckResult(identity, True)
