"""
Constructors for the standard and Jordanian R-matrices, the contraction
matrix g and the metrics C.
"""

from __future__ import annotations

from ..scalar import ETA, H, ONE, Q, ScalarQH, s_power
from ..tensor import RingMatrix


def _pair(N: int, i: int, j: int) -> int:
    """
    0-based position of the 1-based index pair (i, j) in V (x) V.
    """
    return (i - 1) * N + (j - 1)


def r_standard(N: int) -> RingMatrix:
    """
    Standard GL_q(N) R-matrix

        q sum_i e_ii (x) e_ii + sum_{i != j} e_ii (x) e_jj
        + (q - q^-1) sum_{i < j} e_ij (x) e_ji

    Arguments:
        N (int): Dimension of the fundamental representation.

    Returns:
        RingMatrix: N**2 x N**2 matrix with factor dimensions (N, N).
    """
    if N < 1:
        raise ValueError("N must be at least 1.")
    lam = Q - Q.inverse()
    values: dict[tuple[int, int], ScalarQH] = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            values[_pair(N, i, j), _pair(N, i, j)] = Q if i == j else ONE
            if i < j:
                values[_pair(N, i, j), _pair(N, j, i)] = lam
    return RingMatrix.from_sparse(N * N, values, (N, N))


def r_jordanian(N: int) -> RingMatrix:
    """
    Jordanian GL_h(N) R-matrix in closed form.
    """
    if N < 2:
        raise ValueError("The Jordanian R-matrix needs N >= 2.")
    values: dict[tuple[int, int], ScalarQH] = {
        (k, k): ONE for k in range(N * N)
    }
    # e_ab (x) e_cd sits at row (a, c), column (b, d)
    values[_pair(N, 1, 1), _pair(N, 1, N)] = H
    values[_pair(N, 1, 1), _pair(N, N, 1)] = -H
    values[_pair(N, 1, N), _pair(N, N, N)] = H
    values[_pair(N, N, 1), _pair(N, N, N)] = -H
    for i in range(2, N):
        values[_pair(N, 1, i), _pair(N, i, N)] = 2 * H
        values[_pair(N, i, 1), _pair(N, N, i)] = -2 * H
    values[_pair(N, 1, 1), _pair(N, N, N)] = H * H
    return RingMatrix.from_sparse(N * N, values, (N, N))


def g_matrix(N: int) -> RingMatrix:
    """
    Contraction matrix g = sum_i e_ii + eta e_1N with eta = h / (q - 1).

    For N = 1 the two terms share the single entry and g = [1 + eta].
    """
    if N < 1:
        raise ValueError("N must be at least 1.")
    values = {(k, k): ONE for k in range(N)}
    values[0, N - 1] = values.get((0, N - 1), 0) + ETA
    return RingMatrix.from_sparse(N, values)


def c_metric_q(N: int, script: bool = False) -> RingMatrix:
    """
    q-side metric C' = sum_i (-1)**(N - i) q**(-(N - 2i + 1)/2) e_{i, N+1-i}.

    ``script`` selects the second-factor metric (indices s, m). Both factors
    share one formula, so the flag only labels the call site.
    """
    if N < 1:
        raise ValueError("N must be at least 1.")
    values = {
        (i - 1, N - i): (-1) ** (N - i) * s_power(-(N - 2 * i + 1))
        for i in range(1, N + 1)
    }
    return RingMatrix.from_sparse(N, values)


def c_metric_closed_form(N: int) -> RingMatrix:
    """
    Contracted metric sum_i (-1)**i e_{i, N+1-i} + (N - 1) h e_NN.
    """
    values: dict[tuple[int, int], ScalarQH] = {
        (i - 1, N - i): ScalarQH((-1) ** i) for i in range(1, N + 1)
    }
    corner = (N - 1, N - 1)
    values[corner] = values.get(corner, ScalarQH(0)) + (N - 1) * H
    return RingMatrix.from_sparse(N, values)


def perturb(R: RingMatrix, row: int, col: int, amount: ScalarQH = H) -> RingMatrix:
    """
    Copy of R with ``amount`` added to the 1-based entry (row, col).
    """
    current = R.entry(row, col)
    values = {(i, j): value for i, j, value in R.nonzero()}
    values[row - 1, col - 1] = current + amount
    return RingMatrix.from_sparse(R.dim, values, R.factors)
