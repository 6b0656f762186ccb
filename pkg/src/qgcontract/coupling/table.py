"""
Coupling coefficients for 1/2 x 1/2: the classical su(2) table and an
h-deformed table derived by constraint solving in the boson algebra.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np
from sympy import Rational, S, sqrt
from sympy.physics.quantum.cg import CG

from ..freealg import FreeElement, RewriteSystem, boson_relations, trivial_factor
from ..qgroup import c_metric_closed_form, r_jordanian
from ..scalar import H, ZERO, ScalarQH
from ..tensor import row_reduce

HALF = Fraction(1, 2)
# component index 1 <-> m = +1/2, index 2 <-> m = -1/2
M_OF_INDEX = {1: HALF, 2: -HALF}
PAIRS = ((1, 1), (1, 2), (2, 1), (2, 2))

Key = tuple[Fraction, Fraction, int, int]


class InvalidLabels(ValueError):
    """
    Raised for coupled labels outside j in {0, 1}, |m| <= j.
    """


class SolveDimensionError(RuntimeError):
    """
    Raised when a solution space has the wrong dimension.
    """


def check_labels(j: int, m: int) -> None:
    if j not in (0, 1):
        raise InvalidLabels(f"Rank j must be 0 or 1, got {j}.")
    if not isinstance(m, int) or abs(m) > j:
        raise InvalidLabels(f"Component m = {m} is invalid for j = {j}.")


def coupled_labels() -> list[tuple[int, int]]:
    """
    (j, m) pairs of the decomposition, triplet first.
    """
    return [(1, 1), (1, 0), (1, -1), (0, 0)]


@dataclass(frozen=True)
class CouplingTable:
    """
    Coefficients <1/2 m1, 1/2 m2 | j m> keyed by (m1, m2, j, m).
    """

    entries: Mapping[Key, ScalarQH]
    convention_note: str = ""
    free_columns: dict[tuple[int, int], list[int]] = field(default_factory=dict)

    def coefficient(self, m1: Fraction, m2: Fraction, j: int, m: int) -> ScalarQH:
        check_labels(j, m)
        return self.entries.get((Fraction(m1), Fraction(m2), j, m), ZERO)

    def by_index(self, a: int, b: int, j: int, m: int) -> ScalarQH:
        """
        Coefficient by component indices (1 or 2) instead of m-values.
        """
        return self.coefficient(M_OF_INDEX[a], M_OF_INDEX[b], j, m)

    def vector(self, j: int, m: int) -> list[ScalarQH]:
        """
        Coefficients (c11, c12, c21, c22) of one coupled component.
        """
        return [self.by_index(a, b, j, m) for a, b in PAIRS]

    def subs_h(self, value: int | Fraction) -> CouplingTable:
        return replace(
            self, entries={key: c.subs_h(value) for key, c in self.entries.items()}
        )

    def perturbed(
        self, a: int, b: int, j: int, m: int, amount: ScalarQH = H
    ) -> CouplingTable:
        """
        Copy with ``amount`` added to one coefficient.
        """
        key = (M_OF_INDEX[a], M_OF_INDEX[b], j, m)
        entries = dict(self.entries)
        entries[key] = entries.get(key, ZERO) + amount
        return replace(self, entries=entries)

    def to_json_dict(self) -> dict:
        rows = []
        for j, m in coupled_labels():
            for a, b in PAIRS:
                rows.append(
                    {
                        "j": j,
                        "m": m,
                        "m1": str(M_OF_INDEX[a]),
                        "m2": str(M_OF_INDEX[b]),
                        "value": str(self.by_index(a, b, j, m)),
                    }
                )
        return {"convention": self.convention_note, "entries": rows}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CouplingTable):
            return NotImplemented
        return all(
            self.vector(j, m) == other.vector(j, m) for j, m in coupled_labels()
        )

    __hash__ = None  # type: ignore[assignment]


def _from_sympy(value) -> ScalarQH:
    """
    Convert a number of the form r or r * sqrt(2), r rational.
    """
    if value == 0:
        return ZERO
    coeff = value.as_coefficient(sqrt(2))
    if coeff is not None:
        coeff = Rational(coeff)
        return ScalarQH.with_radical(0, Fraction(int(coeff.p), int(coeff.q)))
    rational = Rational(value)
    return ScalarQH(Fraction(int(rational.p), int(rational.q)))


def classical_table() -> CouplingTable:
    """
    su(2) Clebsch-Gordan coefficients for 1/2 x 1/2.
    """
    entries: dict[Key, ScalarQH] = {}
    for j, m in coupled_labels():
        for a, b in PAIRS:
            m1, m2 = M_OF_INDEX[a], M_OF_INDEX[b]
            value = CG(
                S.Half,
                Rational(m1.numerator, m1.denominator),
                S.Half,
                Rational(m2.numerator, m2.denominator),
                j,
                m,
            ).doit()
            coeff = _from_sympy(value)
            if coeff:
                entries[m1, m2, j, m] = coeff
    return CouplingTable(entries, "classical su(2) Clebsch-Gordan coefficients")


def default_tilde_system(max_degree: int = 8) -> RewriteSystem:
    """
    Tilde-form system for n = 2, m = 1 with the Jordanian data.
    """
    one = trivial_factor()
    return boson_relations(
        r_jordanian(2), one, c_metric_closed_form(2), one, "tilde", max_degree
    )


def _gen(family: str, a: int) -> FreeElement:
    return FreeElement.generator(f"{family}{a}")


def singlet_constraints(rs: RewriteSystem) -> list[FreeElement]:
    """
    Normal forms of Ap_a Ap_b in the order c11, c12, c21, c22.
    """
    return [rs.reduce(_gen("Ap", a) * _gen("Ap", b)) for a, b in PAIRS]


def triplet_constraints(rs: RewriteSystem) -> list[FreeElement]:
    """
    Normal forms of At_a Ap_b - Ap_a At_b in the order c11, c12, c21, c22.
    """
    return [
        rs.reduce(_gen("At", a) * _gen("Ap", b) - _gen("Ap", a) * _gen("At", b))
        for a, b in PAIRS
    ]


def constraint_matrix(rs: RewriteSystem, elements: list[FreeElement]) -> np.ndarray:
    """
    One row per normal word, one column per unknown coefficient.
    """
    words = sorted({w for e in elements for w in e.words()}, key=rs.word_key)
    matrix = np.full((max(len(words), 1), len(elements)), ZERO, dtype=object)
    for r, word in enumerate(words):
        for c, element in enumerate(elements):
            matrix[r, c] = element.coefficient(word)
    return matrix


def _solve_kernel(
    matrix: np.ndarray, dimension: int, label: str
) -> tuple[np.ndarray, list[int], list[int]]:
    reduced, pivots = row_reduce(matrix)
    n_cols = matrix.shape[1]
    free = [c for c in range(n_cols) if c not in pivots]
    if len(free) != dimension:
        raise SolveDimensionError(
            f"The {label} solution space has dimension {len(free)}, "
            f"expected {dimension}."
        )
    return reduced, pivots, free


def _kernel_vector(
    reduced: np.ndarray,
    pivots: list[int],
    free: list[int],
    free_values: dict[int, ScalarQH],
) -> list[ScalarQH]:
    vector = [ZERO] * reduced.shape[1]
    for f in free:
        vector[f] = free_values[f]
    for r, p in enumerate(pivots):
        vector[p] = -sum((reduced[r, f] * vector[f] for f in free), ZERO)
    return vector


def singlet_kernel(rs: RewriteSystem | None = None) -> list[ScalarQH]:
    """
    Unnormalized singlet solution with its free coordinate set to 1.
    """
    rs = default_tilde_system() if rs is None else rs
    matrix = constraint_matrix(rs, singlet_constraints(rs))
    reduced, pivots, free = _solve_kernel(matrix, 1, "singlet")
    return _kernel_vector(reduced, pivots, free, {free[0]: ScalarQH(1)})


def derive_table(relations: RewriteSystem | None = None) -> CouplingTable:
    """
    Derive the h-deformed coefficients from a tilde-form system (n = 2, m = 1).

    The singlet spans the one-dimensional space of c with
    sum c_ab Ap_a Ap_b = 0; the triplet spans the three-dimensional space with
    sum c_ab (At_a Ap_b - Ap_a At_b) = 0. Inside each space the free
    coordinates are fixed to their classical values, so the table reduces to
    the su(2) one at h = 0.

    Raises:
        SolveDimensionError: If a solution space has the wrong dimension.
    """
    rs = default_tilde_system() if relations is None else relations
    classical = classical_table()
    entries: dict[Key, ScalarQH] = {}
    free_columns: dict[tuple[int, int], list[int]] = {}
    systems = {
        0: _solve_kernel(constraint_matrix(rs, singlet_constraints(rs)), 1, "singlet"),
        1: _solve_kernel(constraint_matrix(rs, triplet_constraints(rs)), 3, "triplet"),
    }
    for j, m in coupled_labels():
        reduced, pivots, free = systems[j]
        target = classical.vector(j, m)
        vector = _kernel_vector(reduced, pivots, free, {f: target[f] for f in free})
        free_columns[j, m] = free
        for (a, b), value in zip(PAIRS, vector):
            if value:
                entries[M_OF_INDEX[a], M_OF_INDEX[b], j, m] = value
    names = ["c11", "c12", "c21", "c22"]
    note = (
        "index 1 <-> m=+1/2, index 2 <-> m=-1/2; free coordinates set to their "
        f"classical values: singlet {[names[f] for f in systems[0][2]]}, "
        f"triplet {[names[f] for f in systems[1][2]]}"
    )
    return CouplingTable(entries, note, free_columns)


def weight_violations(table: CouplingTable) -> list[dict[str, str | int]]:
    """
    Nonzero coefficients with m1 + m2 != m.
    """
    found: list[dict[str, str | int]] = []
    for j, m in coupled_labels():
        for a, b in PAIRS:
            m1, m2 = M_OF_INDEX[a], M_OF_INDEX[b]
            value = table.by_index(a, b, j, m)
            if value and m1 + m2 != m:
                found.append(
                    {"j": j, "m": m, "m1": str(m1), "m2": str(m2), "value": str(value)}
                )
    return found
