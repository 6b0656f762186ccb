"""
Exact dense linear algebra over ScalarQH: Kronecker products, tensor-leg
operations, inversion and row reduction.
"""

from .ringmatrix import (
    RingMatrix,
    IndexOutOfRange,
    MissingFactorDims,
    SingularMatrix,
    basis_matrix,
    kron,
    partial_transpose,
    swap_legs,
    flip_matrix,
    embed_three,
    invert,
    row_reduce,
    nullspace,
)

__all__ = [
    "RingMatrix",
    "IndexOutOfRange",
    "MissingFactorDims",
    "SingularMatrix",
    "basis_matrix",
    "kron",
    "partial_transpose",
    "swap_legs",
    "flip_matrix",
    "embed_three",
    "invert",
    "row_reduce",
    "nullspace",
]
