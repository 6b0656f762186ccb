"""
Structural checks of an R-matrix: Yang-Baxter equation, triangularity,
Hecke condition and unitality of the classical limit.
"""

from __future__ import annotations

from collections.abc import Iterable

from ..prog.report import CheckReport, CheckResult
from ..scalar import PoleError, NonPolynomialError, Q
from ..tensor import (
    MissingFactorDims,
    RingMatrix,
    SingularMatrix,
    embed_three,
    flip_matrix,
    invert,
    swap_legs,
)

STRUCTURE_CHECKS = ("ybe", "triangular", "hecke", "unital")


def _leg_dim(R: RingMatrix) -> int:
    if R.factors is None or R.factors[0] != R.factors[1]:
        raise MissingFactorDims("Structure checks need an R-matrix on V (x) V.")
    return R.factors[0]


def check_ybe(R: RingMatrix) -> CheckResult:
    """
    R_12 R_13 R_23 = R_23 R_13 R_12 on V (x) V (x) V.
    """
    N = _leg_dim(R)
    r12 = embed_three(R, 12, N)
    r13 = embed_three(R, 13, N)
    r23 = embed_three(R, 23, N)
    lhs = r12 @ r13 @ r23
    rhs = r23 @ r13 @ r12
    return CheckResult.from_difference("ybe", lhs.first_difference(rhs))


def check_triangular(R: RingMatrix) -> CheckResult:
    """
    R_12^-1 = R_21.
    """
    try:
        inverse = invert(R)
    except SingularMatrix as e:
        return CheckResult("triangular", False, {"reason": str(e)})
    return CheckResult.from_difference(
        "triangular", inverse.first_difference(swap_legs(R))
    )


def check_hecke(R: RingMatrix) -> CheckResult:
    """
    (P R - q)(P R + q^-1) = 0 with P the flip.
    """
    N = _leg_dim(R)
    identity = RingMatrix.identity(N * N, (N, N))
    braid = flip_matrix(N) @ R
    product = (braid - identity * Q) @ (braid + identity * Q.inverse())
    return CheckResult.from_difference(
        "hecke", product.first_difference(RingMatrix.zeros(N * N, (N, N)))
    )


def check_unital(R: RingMatrix) -> CheckResult:
    """
    The classical point q = 1, h = 0 gives the identity.
    """
    try:
        classical = R.limit_q_to_1().subs_h(0)
    except (PoleError, NonPolynomialError) as e:
        return CheckResult("unital", False, {"reason": str(e)})
    return CheckResult.from_difference(
        "unital", classical.first_difference(RingMatrix.identity(R.dim))
    )


_CHECKERS = {
    "ybe": check_ybe,
    "triangular": check_triangular,
    "hecke": check_hecke,
    "unital": check_unital,
}


def verify_structure(
    R: RingMatrix, checks: Iterable[str] = ("ybe", "triangular", "unital")
) -> CheckReport:
    """
    Run the requested structural checks on an R-matrix.

    Failures are reported with the first differing entry, never raised.

    Arguments:
        R (RingMatrix): R-matrix on V (x) V with factor dimensions (N, N).
        checks (Iterable[str]): Subset of ``STRUCTURE_CHECKS``.

    Returns:
        CheckReport: One result per requested check, in request order.

    Raises:
        ValueError: For an unknown check name.
    """
    report = CheckReport()
    for name in checks:
        if name not in _CHECKERS:
            raise ValueError(
                f"Unknown structure check '{name}'. Choose from {STRUCTURE_CHECKS}."
            )
        report.add(_CHECKERS[name](R))
    return report
