"""
Coupled products and coupled commutators of rank-1/2 tensor operators,
and verification of the coupled exchange identities.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import product
from typing import Union

from ..freealg import FreeElement, RewriteSystem, boson_relations
from ..oscillator import FockRep, build_h_spinors, build_weyl, column_difference
from ..prog.report import CheckReport, CheckResult
from ..qgroup import c_metric_closed_form, r_jordanian
from ..scalar import SQRT2, ScalarQH
from ..tensor import RingMatrix
from .table import CouplingTable, check_labels, default_tilde_system

Component = Union[FreeElement, RingMatrix]
Labels = Union[int, tuple[int, int]]


@dataclass(frozen=True)
class SpinorPair:
    """
    Components of a rank-1/2 operator keyed by (a,), or of a double spinor
    keyed by (a, s); indices are 1 or 2.
    """

    label: str
    components: Mapping[tuple[int, ...], Component]

    def __post_init__(self) -> None:
        keys = set(self.components)
        if keys not in ({(1,), (2,)}, set(product((1, 2), repeat=2))):
            raise ValueError(
                f"Spinor '{self.label}' needs 2 or 4 components, got {sorted(keys)}."
            )

    @property
    def double(self) -> bool:
        return len(self.components) == 4

    def __getitem__(self, key: tuple[int, ...]) -> Component:
        return self.components[key]

    @classmethod
    def from_generators(cls, prefix: str, double: bool = False) -> SpinorPair:
        if double:
            components = {
                (a, s): FreeElement.generator(f"{prefix}{a}{s}")
                for a, s in product((1, 2), repeat=2)
            }
        else:
            components = {(a,): FreeElement.generator(f"{prefix}{a}") for a in (1, 2)}
        return cls(prefix, components)

    @classmethod
    def from_fock(cls, rep: FockRep, prefix: str) -> SpinorPair:
        return cls(prefix, {(a,): rep.op(f"{prefix}{a}") for a in (1, 2)})


def _multiply(x: Component, y: Component) -> Component:
    if isinstance(x, RingMatrix) and isinstance(y, RingMatrix):
        return x @ y
    if isinstance(x, FreeElement) and isinstance(y, FreeElement):
        return x * y
    raise TypeError("Spinor components must be of the same kind.")


def _zero_like(x: Component) -> Component:
    if isinstance(x, RingMatrix):
        return RingMatrix.zeros(x.dim, x.factors)
    return FreeElement.zero()


def _as_pair(labels: Labels) -> tuple[int, ...]:
    return labels if isinstance(labels, tuple) else (labels,)


def coupled_product(
    U: SpinorPair, V: SpinorPair, table: CouplingTable, j: Labels, m: Labels
) -> Component:
    """
    [U x V]^j_m = sum <1/2 m1, 1/2 m2 | j m> U_m1 V_m2.

    For double spinors ``j`` and ``m`` are pairs and one coefficient per
    factor is used.

    Raises:
        InvalidLabels: For |m| > j or j outside {0, 1}.
    """
    if U.double != V.double:
        raise ValueError("Cannot couple a spinor with a double spinor.")
    js, ms = _as_pair(j), _as_pair(m)
    expected = 2 if U.double else 1
    if len(js) != expected or len(ms) != expected:
        raise ValueError(f"Expected {expected} rank label(s) for '{U.label}'.")
    for jj, mm in zip(js, ms):
        check_labels(jj, mm)
    total = _zero_like(U[next(iter(U.components))])
    for left, right in product(U.components, V.components):
        coeff: ScalarQH | None = None
        for factor, (jj, mm) in enumerate(zip(js, ms)):
            c = table.by_index(left[factor], right[factor], jj, mm)
            coeff = c if coeff is None else coeff * c
        if coeff:
            total = total + _multiply(U[left], V[right]) * coeff
    return total


def coupled_commutator(
    U: SpinorPair, V: SpinorPair, table: CouplingTable, j: Labels, m: Labels
) -> Component:
    """
    [U, V]^j_m = [U x V]^j_m - (-1)**eps [V x U]^j_m with eps = sum(1 - j).
    """
    eps = sum(1 - jj for jj in _as_pair(j))
    sign = -1 if eps % 2 else 1
    return coupled_product(U, V, table, j, m) - coupled_product(
        V, U, table, j, m
    ) * sign


def _abstract_result(
    name: str, value: FreeElement, expected: FreeElement, rs: RewriteSystem
) -> CheckResult:
    remainder = rs.reduce(value - expected)
    if remainder:
        return CheckResult(name, False, {"remainder": str(remainder)})
    return CheckResult(name, True)


def _n2m1_identities() -> list[tuple[str, str, str, int, int, ScalarQH | int]]:
    identities: list[tuple[str, str, str, int, int, ScalarQH | int]] = [
        ("[Ap,Ap]^0_0", "Ap", "Ap", 0, 0, 0),
        ("[At,At]^0_0", "At", "At", 0, 0, 0),
    ]
    for m in (1, 0, -1):
        identities.append((f"[At,Ap]^1_{m}", "At", "Ap", 1, m, 0))
    identities.append(("[At,Ap]^0_0", "At", "Ap", 0, 0, SQRT2))
    return identities


def verify_coupled_n2m1(
    table: CouplingTable,
    rs: RewriteSystem | None = None,
    rep: FockRep | None = None,
    trunc: int = 6,
) -> CheckReport:
    """
    Coupled identities of the n = 2, m = 1 algebra: the singlet commutators
    of equal spinors and the triplet of the mixed one vanish, the mixed
    singlet is sqrt(2) I. Each is checked by free-algebra reduction and on
    the truncated representation (states of degree <= D - 2).
    """
    rs = default_tilde_system() if rs is None else rs
    rep = build_h_spinors(build_weyl(2, trunc)) if rep is None else rep
    columns = rep.columns_up_to(rep.safe_degree)
    abstract = {p: SpinorPair.from_generators(p) for p in ("Ap", "At")}
    concrete = {p: SpinorPair.from_fock(rep, p) for p in ("Ap", "At")}
    report = CheckReport()
    for name, left, right, j, m, rhs in _n2m1_identities():
        value = coupled_commutator(abstract[left], abstract[right], table, j, m)
        expected = FreeElement.unit() * rhs if rhs else FreeElement.zero()
        report.add(_abstract_result(f"{name}:abstract", value, expected, rs))

        matrix = coupled_commutator(concrete[left], concrete[right], table, j, m)
        if rhs:
            matrix = matrix - rep.identity * rhs
        report.add(
            CheckResult.from_difference(
                f"{name}:fock", column_difference(matrix, columns)
            )
        )
    return report


def double_tilde_system(max_degree: int = 8) -> RewriteSystem:
    """
    Tilde-form system for n = m = 2 with Jordanian data in both factors.
    """
    R = r_jordanian(2)
    C = c_metric_closed_form(2)
    return boson_relations(R, R, C, C, "tilde", max_degree, confluence_degree=3)


def verify_coupled_n2m2(
    table: CouplingTable, rs: RewriteSystem | None = None
) -> CheckReport:
    """
    Coupled identities of the double spinors: the mixed (1,0) and (0,1)
    couplings of equal double spinors vanish, and the mixed commutator of At
    and Ap is 2 I in the (0,0) channel and zero otherwise.
    """
    rs = double_tilde_system() if rs is None else rs
    Ap = SpinorPair.from_generators("Ap", double=True)
    At = SpinorPair.from_generators("At", double=True)
    zero = FreeElement.zero()
    report = CheckReport()
    for label, spinor in (("Ap", Ap), ("At", At)):
        for m in (1, 0, -1):
            for j_pair, m_pair in (((1, 0), (m, 0)), ((0, 1), (0, m))):
                name = f"[{label},{label}]^{j_pair}_{m_pair}"
                value = coupled_commutator(spinor, spinor, table, j_pair, m_pair)
                report.add(_abstract_result(name, value, zero, rs))
    for j1, j2 in product((0, 1), repeat=2):
        for m1 in range(-j1, j1 + 1):
            for m2 in range(-j2, j2 + 1):
                name = f"[At,Ap]^{(j1, j2)}_{(m1, m2)}"
                value = coupled_commutator(At, Ap, table, (j1, j2), (m1, m2))
                if (j1, j2, m1, m2) == (0, 0, 0, 0):
                    expected = FreeElement.unit() * 2
                else:
                    expected = zero
                report.add(_abstract_result(name, value, expected, rs))
    return report
