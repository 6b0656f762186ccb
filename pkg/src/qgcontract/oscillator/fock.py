"""
Truncated polynomial (Bargmann-type) representation of the multimode Weyl
algebra and the h-deformed spinor operators built from it.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product

from ..prog.report import CheckResult
from ..scalar import H, ONE, ScalarQH
from ..qgroup import c_metric_closed_form
from ..tensor import RingMatrix, invert

LADDER_OPS = ("ap1", "ap2", "a1", "a2")
SPINOR_OPS = ("Jp", "J0", "Ap1", "Ap2", "At1", "At2", "A1", "A2")


@dataclass(frozen=True)
class FockRep:
    """
    Operators on polynomials of total degree <= max_degree.

    Basis states are exponent tuples ordered by total degree, then
    lexicographically; column c of an operator is the image of state c.
    """

    modes: int
    max_degree: int
    basis: tuple[tuple[int, ...], ...]
    ops: Mapping[str, RingMatrix] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def safe_degree(self) -> int:
        return self.max_degree - 2

    @property
    def identity(self) -> RingMatrix:
        return RingMatrix.identity(self.dim)

    def op(self, name: str) -> RingMatrix:
        if name not in self.ops:
            raise KeyError(f"Operator '{name}' is not part of this representation.")
        return self.ops[name]

    def index(self, state: tuple[int, ...]) -> int:
        return self.basis.index(state)

    def state_degree(self, index: int) -> int:
        return sum(self.basis[index])

    def columns_up_to(self, degree: int) -> list[int]:
        """
        Indices of basis states of total degree <= degree; a prefix of the basis.
        """
        return [c for c, state in enumerate(self.basis) if sum(state) <= degree]

    def with_ops(self, **ops: RingMatrix) -> FockRep:
        return replace(self, ops={**self.ops, **ops})


def fock_basis(modes: int, max_degree: int) -> tuple[tuple[int, ...], ...]:
    states = [
        k for k in product(range(max_degree + 1), repeat=modes) if sum(k) <= max_degree
    ]
    return tuple(sorted(states, key=lambda k: (sum(k), k)))


def _shift(state: tuple[int, ...], mode: int, delta: int) -> tuple[int, ...]:
    shifted = list(state)
    shifted[mode] += delta
    return tuple(shifted)


def build_weyl(modes: int, D: int) -> FockRep:
    """
    Ladder operators a+_i (multiplication by x_i, truncated above degree D)
    and a_i (partial derivative), named ``ap<i>`` and ``a<i>``.

    Arguments:
        modes (int): Number of oscillator modes.
        D (int): Truncation degree, at least 2.

    Returns:
        FockRep: Representation carrying only the ladder operators.
    """
    if modes < 1:
        raise ValueError("At least one mode is required.")
    if D < 2:
        raise ValueError("The truncation degree must be at least 2.")
    basis = fock_basis(modes, D)
    position = {state: c for c, state in enumerate(basis)}
    ops: dict[str, RingMatrix] = {}
    for mode in range(modes):
        raising: dict[tuple[int, int], ScalarQH] = {}
        lowering: dict[tuple[int, int], ScalarQH] = {}
        for c, state in enumerate(basis):
            if sum(state) < D:
                raising[position[_shift(state, mode, 1)], c] = ONE
            if state[mode] > 0:
                lowering[position[_shift(state, mode, -1)], c] = ScalarQH(state[mode])
        ops[f"ap{mode + 1}"] = RingMatrix.from_sparse(len(basis), raising)
        ops[f"a{mode + 1}"] = RingMatrix.from_sparse(len(basis), lowering)
    return FockRep(modes=modes, max_degree=D, basis=basis, ops=ops)


def neumann_inverse(X: RingMatrix, terms: int) -> RingMatrix:
    """
    sum_{k=0}^{terms} X**k, the inverse of (I - X) for nilpotent X.
    """
    total = RingMatrix.identity(X.dim)
    power = RingMatrix.identity(X.dim)
    for _ in range(terms):
        power = power @ X
        total = total + power
    return total


def build_h_spinors(
    rep: FockRep,
    h_value: int | Fraction | None = None,
    metric: RingMatrix | None = None,
) -> FockRep:
    """
    Add the h-deformed spinor operators to a two-mode representation.

    With u = h/2, J+ = a+_1 a_2, J0 = (a+_1 a_1 - a+_2 a_2)/2,
    K = 1 - u J+ and S = K^-1 (a finite Neumann sum):

        Ap1 = S a+_1            Ap2 = K a+_2 + u (Ap1 - 2 a+_1 J0)
        At1 = S a_2             At2 = -K a_1 + u (At1 - 2 a_2 J0)

    and (A1, A2) = (At1, At2) C^-1.

    Arguments:
        rep (FockRep): Two-mode representation from :func:`build_weyl`.
        h_value (int | Fraction | None): Numeric value for h; None keeps h
            formal.
        metric (RingMatrix | None): Metric C; defaults to the contracted
            two-dimensional metric [[0, -1], [1, h]].
    """
    if rep.modes != 2:
        raise ValueError("The spinor operators need a two-mode representation.")
    h = H if h_value is None else ScalarQH(h_value)
    if metric is None:
        metric = c_metric_closed_form(2)
    if h_value is not None:
        metric = metric.subs_h(h_value)
    u = h * Fraction(1, 2)
    identity = rep.identity
    ap1, ap2, a1, a2 = (rep.op(name) for name in LADDER_OPS)

    jp = ap1 @ a2
    j0 = (ap1 @ a1 - ap2 @ a2) * Fraction(1, 2)
    k_op = identity - jp * u
    s_op = neumann_inverse(jp * u, rep.max_degree)

    Ap1 = s_op @ ap1
    Ap2 = k_op @ ap2 + (Ap1 - ap1 @ j0 * 2) * u
    At1 = s_op @ a2
    At2 = -(k_op @ a1) + (At1 - a2 @ j0 * 2) * u

    c_inv = invert(metric)
    tilde = (At1, At2)
    A1 = tilde[0] * c_inv[0, 0] + tilde[1] * c_inv[1, 0]
    A2 = tilde[0] * c_inv[0, 1] + tilde[1] * c_inv[1, 1]
    return rep.with_ops(
        Jp=jp, J0=j0, Ap1=Ap1, Ap2=Ap2, At1=At1, At2=At2, A1=A1, A2=A2
    )


def restrict(M: RingMatrix, count: int) -> RingMatrix:
    """
    Leading count x count block.
    """
    return RingMatrix(M.entries[:count, :count])


def check_truncation_stability(D: int) -> CheckResult:
    """
    Operators built at truncation D + 1, restricted to degree <= D - 2,
    equal those built at truncation D.
    """
    small = build_h_spinors(build_weyl(2, D))
    large = build_h_spinors(build_weyl(2, D + 1))
    count = len(small.columns_up_to(D - 2))
    for name in LADDER_OPS + SPINOR_OPS:
        difference = restrict(small.op(name), count).first_difference(
            restrict(large.op(name), count)
        )
        if difference is not None:
            row, col, value = difference
            return CheckResult(
                "truncation-stability",
                False,
                {"operator": name, "row": row, "col": col, "value": value},
            )
    return CheckResult("truncation-stability", True)


def check_neumann_inverse(rep: FockRep) -> CheckResult:
    """
    (1 - u J+) times its Neumann sum is the identity on the whole space.
    """
    u = H * Fraction(1, 2)
    jp = rep.op("Jp")
    product_ = (rep.identity - jp * u) @ neumann_inverse(jp * u, rep.max_degree)
    return CheckResult.from_difference(
        "neumann-inverse", product_.first_difference(rep.identity)
    )


def degree_shift(rep: FockRep, name: str) -> int | None:
    """
    Common change of total degree of all nonzero entries, or None if the
    operator mixes degrees.
    """
    shifts = {
        rep.state_degree(row) - rep.state_degree(col)
        for row, col, _ in rep.op(name).nonzero()
    }
    if len(shifts) != 1:
        return None
    return shifts.pop()


def check_degree_bookkeeping(rep: FockRep) -> CheckResult:
    """
    Creators raise the total degree by exactly one, annihilators lower it
    by one and J+ keeps it.
    """
    expected = {"Ap1": 1, "Ap2": 1, "At1": -1, "At2": -1, "A1": -1, "A2": -1, "Jp": 0}
    for name, shift in expected.items():
        found = degree_shift(rep, name)
        if found != shift:
            return CheckResult(
                "degree-bookkeeping",
                False,
                {"operator": name, "expected": shift, "found": found},
            )
    return CheckResult("degree-bookkeeping", True)
