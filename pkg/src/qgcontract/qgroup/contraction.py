"""
The contraction GL_q -> GL_h: similarity by g followed by the entrywise
q -> 1 limit, for R-matrices, metrics and the twisted R-tilde.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from ..scalar import ZERO, Q, ScalarQH
from ..tensor import (
    RingMatrix,
    invert,
    kron,
    partial_transpose,
    swap_legs,
)
from .rmatrix import (
    c_metric_closed_form,
    c_metric_q,
    g_matrix,
    r_jordanian,
    r_standard,
)


class ExpressionMismatch(RuntimeError):
    """
    Raised when two defining expressions of the same object disagree.
    """


@dataclass
class ContractionReport:
    """
    Limit path versus closed form of a contracted matrix.
    """

    n: int
    path_a: RingMatrix
    path_b: RingMatrix
    pole_locations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.path_a == self.path_b


def conjugate_tracking_poles(
    left: RingMatrix, middle: RingMatrix, right: RingMatrix
) -> tuple[RingMatrix, list[tuple[int, int]]]:
    """
    Triple product left @ middle @ right, expanded term by term.

    Returns:
        tuple[RingMatrix, list[tuple[int, int]]]: The product and the 1-based
        entries in which at least one individual term has a pole at q = 1.
    """
    mid_rows = middle.row_support()
    right_rows = right.row_support()
    values: dict[tuple[int, int], ScalarQH] = {}
    poles: set[tuple[int, int]] = set()
    for i, row in enumerate(left.row_support()):
        for k, a in row:
            for ll, b in mid_rows[k]:
                ab = a * b
                for j, c in right_rows[ll]:
                    term = ab * c
                    if term.has_pole_at_one():
                        poles.add((i + 1, j + 1))
                    values[i, j] = values.get((i, j), ZERO) + term
    product = RingMatrix.from_sparse(middle.dim, values, middle.factors)
    return product, sorted(poles)


def _g_pair(N: int) -> tuple[RingMatrix, RingMatrix]:
    g = g_matrix(N)
    g_inv = invert(g)
    return kron(g_inv, g_inv), kron(g, g)


def contract_r(N: int) -> ContractionReport:
    """
    Contract the standard R-matrix: lim (g^-1 (x) g^-1) R' (g (x) g).

    Arguments:
        N (int): Dimension, at least 2.

    Returns:
        ContractionReport: The limit (path_a) against the closed-form
        Jordanian R-matrix (path_b).

    Raises:
        PoleError: If an entry of the conjugated matrix has no limit.
    """
    if N < 2:
        raise ValueError("Contraction needs N >= 2.")
    G_inv, G = _g_pair(N)
    conjugated, poles = conjugate_tracking_poles(G_inv, r_standard(N), G)
    return ContractionReport(
        n=N,
        path_a=conjugated.limit_q_to_1(),
        path_b=r_jordanian(N),
        pole_locations=poles,
    )


def limit_equivalence(N: int) -> bool:
    """
    Check that R'_12 and R'_21^-1 contract to the same Jordanian R-matrix,
    using R_12^-1 = R_21 on the h-side.
    """
    if N < 2:
        raise ValueError("Contraction needs N >= 2.")
    G_inv, G = _g_pair(N)
    r_prime = r_standard(N)
    r_h = r_jordanian(N)
    first = (G_inv @ r_prime @ G).limit_q_to_1()
    second = (G_inv @ invert(swap_legs(r_prime)) @ G).limit_q_to_1()
    return first == r_h and second == r_h and invert(swap_legs(r_h)) == r_h


def c_metric_contract(N: int) -> RingMatrix:
    """
    Contracted metric C = lim g^t C' g.

    The limit exists only for N = 1 and even N; the limit path is compared
    against the closed form sum_i (-1)**i e_ii' + (N - 1) h e_NN. For N = 1
    the similarity is skipped since g(1) = [1 + eta] is singular at q = 1.

    Raises:
        PoleError: For odd N >= 3.
        ExpressionMismatch: If the limit differs from the closed form.
    """
    if N < 1:
        raise ValueError("N must be at least 1.")
    c_prime = c_metric_q(N)
    if N == 1:
        return c_prime.limit_q_to_1()
    g = g_matrix(N)
    contracted = (g.transpose() @ c_prime @ g).limit_q_to_1()
    closed = c_metric_closed_form(N)
    if contracted != closed:
        difference = contracted.first_difference(closed)
        raise ExpressionMismatch(
            f"Contracted metric differs from closed form at {difference}."
        )
    return contracted


def _leg_embeddings(C: RingMatrix, leg: int) -> tuple[RingMatrix, RingMatrix]:
    identity = RingMatrix.identity(C.dim)
    C_inv = invert(C)
    if leg == 1:
        return kron(C, identity), kron(C_inv, identity)
    return kron(identity, C), kron(identity, C_inv)


def r_tilde(
    R: RingMatrix, C: RingMatrix, variant: Literal["q_side", "h_side"]
) -> RingMatrix:
    """
    Twisted R-matrix used in the relations of the tilde annihilators.

    q_side: q C_1 (R^-1)^{t1} C_1^-1, checked against q C_2 (R^{t2})^-1 C_2^-1.
    h_side: C_1^-1 (R^-1)^{t1} C_1, checked against C_2^-1 (R^{t2})^-1 C_2.

    Raises:
        SingularMatrix: If R or C is not invertible.
        ExpressionMismatch: If the leg-1 and leg-2 expressions differ.
    """
    C1, C1_inv = _leg_embeddings(C, 1)
    C2, C2_inv = _leg_embeddings(C, 2)
    r_inv_t1 = partial_transpose(invert(R), 1)
    r_t2_inv = invert(partial_transpose(R, 2))
    if variant == "q_side":
        first = (C1 @ r_inv_t1 @ C1_inv) * Q
        second = (C2 @ r_t2_inv @ C2_inv) * Q
    elif variant == "h_side":
        first = C1_inv @ r_inv_t1 @ C1
        second = C2_inv @ r_t2_inv @ C2
    else:
        raise ValueError(f"Unknown variant '{variant}'.")
    difference = first.first_difference(second)
    if difference is not None:
        raise ExpressionMismatch(
            f"Leg-1 and leg-2 forms of R-tilde differ at {difference}."
        )
    return first.with_factors(R.factors)


def contract_r_tilde(N: int) -> ContractionReport:
    """
    Compare lim (g^-1 (x) g^-1) R-tilde' (g (x) g) with the h-side R-tilde
    built from the Jordanian R-matrix and the contracted metric.
    """
    q_side = r_tilde(r_standard(N), c_metric_q(N), "q_side")
    G_inv, G = _g_pair(N)
    conjugated, poles = conjugate_tracking_poles(G_inv, q_side, G)
    h_side = r_tilde(r_jordanian(N), c_metric_contract(N), "h_side")
    return ContractionReport(
        n=N,
        path_a=conjugated.limit_q_to_1(),
        path_b=h_side,
        pole_locations=poles,
    )


def max_h_degree(M: RingMatrix) -> int:
    """
    Largest h-degree among the entries of a matrix over PolyH.
    """
    return max(value.h_degree() for _, _, value in M.nonzero())
