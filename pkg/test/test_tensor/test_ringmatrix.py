from fractions import Fraction

import numpy as np
import pytest
from qgcontract.scalar import ETA, H, ONE, Q, ZERO  # type: ignore
from qgcontract.tensor import (  # type: ignore
    IndexOutOfRange,
    MissingFactorDims,
    RingMatrix,
    SingularMatrix,
    basis_matrix,
    embed_three,
    flip_matrix,
    invert,
    kron,
    nullspace,
    partial_transpose,
    row_reduce,
    swap_legs,
)
from qgcontract.qgroup import r_jordanian  # type: ignore


@pytest.fixture
def upper() -> RingMatrix:
    return RingMatrix([[1, H], [0, 1]])


def test_construction_errors():
    with pytest.raises(ValueError):
        RingMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        RingMatrix([[1, 0], [0, 1]], factors=(2, 2))
    with pytest.raises(TypeError):
        RingMatrix([[1.0]])


def test_one_based_access(upper):
    assert upper.entry(1, 2) == H
    assert upper[0, 1] == H
    with pytest.raises(IndexOutOfRange):
        upper.entry(3, 1)
    # builtin base class
    with pytest.raises(IndexError):
        upper.entry(0, 1)


def test_arithmetic(upper):
    assert upper @ RingMatrix.identity(2) == upper
    assert (upper @ upper).entry(1, 2) == 2 * H
    assert upper - upper == RingMatrix.zeros(2)
    assert (H * upper).entry(1, 2) == H * H
    assert (upper * 2).entry(2, 2) == 2
    assert (-upper).entry(1, 1) == -1
    assert upper.transpose().entry(2, 1) == H


def test_first_difference(upper):
    assert upper.first_difference(upper) is None
    assert RingMatrix.identity(2).first_difference(upper) == (1, 2, "-h")
    assert not upper.is_identity()
    assert upper.subs_h(0).is_identity()


def test_limit_q_to_1():
    M = RingMatrix([[Q, ETA * (Q - 1)], [ZERO, Q.inverse()]])
    assert M.limit_q_to_1() == RingMatrix([[1, H], [0, 1]])


def test_kron_and_legs():
    A = RingMatrix([[1, H], [0, 1]])
    B = RingMatrix([[2, 0], [0, 3]])
    K = kron(A, B)
    assert K.dim == 4
    assert K.factors == (2, 2)
    # (A (x) B)[(a,c),(b,d)] = A[a,b] B[c,d]
    assert K.entry(1, 3) == 2 * H
    assert K.entry(2, 4) == 3 * H
    assert partial_transpose(K, 1) == kron(A.transpose(), B)
    assert partial_transpose(K, 2) == kron(A, B.transpose())
    assert swap_legs(K) == kron(B, A)


def test_leg_operations_need_factors(upper):
    with pytest.raises(MissingFactorDims):
        partial_transpose(RingMatrix.identity(4), 1)
    with pytest.raises(MissingFactorDims):
        swap_legs(RingMatrix.identity(4))
    with pytest.raises(ValueError):
        partial_transpose(kron(upper, upper), 3)


def test_flip_matrix():
    P = flip_matrix(3)
    assert (P @ P).is_identity()
    A = basis_matrix(3, 1, 2)
    B = basis_matrix(3, 3, 3)
    assert P @ kron(A, B) @ P == kron(B, A)


def test_basis_matrix_range():
    with pytest.raises(IndexOutOfRange):
        basis_matrix(2, 3, 1)


def test_embed_three():
    R = r_jordanian(2)
    for slot in (12, 13, 23):
        assert embed_three(R, slot, 2).dim == 8
    assert embed_three(R, 12, 2) == kron(R, RingMatrix.identity(2)).with_factors(None)
    with pytest.raises(ValueError):
        embed_three(R, 21, 2)


def test_invert():
    R = r_jordanian(2)
    assert (R @ invert(R)).is_identity()
    assert invert(R) == swap_legs(R)
    assert invert(RingMatrix([[Q, 0], [0, H]])) == RingMatrix(
        [[Q.inverse(), 0], [0, ONE / H]]
    )
    with pytest.raises(SingularMatrix):
        invert(RingMatrix([[1, 2], [2, 4]]))


def test_row_reduce_and_nullspace():
    matrix = np.array(
        [[ONE, 2 * ONE, H], [2 * ONE, 4 * ONE, 2 * H]], dtype=object
    )
    reduced, pivots = row_reduce(matrix)
    assert pivots == [0]
    assert reduced[0, 1] == 2
    kernel = nullspace(matrix)
    assert len(kernel) == 2
    assert kernel[0] == [-2 * ONE, ONE, ZERO]
    assert kernel[1] == [-H, ZERO, ONE]


def test_rendering(upper):
    assert RingMatrix([[Q]]).to_json_dict() == {
        "dim": 1,
        "factors": None,
        "entries": [["s^2"]],
    }
    assert upper.to_latex() == (
        "\\begin{pmatrix}\n1 & h \\\\\n0 & 1\n\\end{pmatrix}"
    )
    assert str(RingMatrix([[Fraction(1, 2)]])) == "[1/2]"
