"""
Dense square matrices over ScalarQH and the tensor-leg operations on them.

Tensor index convention: the row index of A (x) B is (i_A - 1) * dim(B) + i_B
(1-based), which is numpy's ``kron`` layout.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Literal

import numpy as np

from ..scalar import ONE, ZERO, ScalarQH, limit_q_to_1


class IndexOutOfRange(IndexError):
    """
    Raised for matrix indices outside 1..N.
    """


class MissingFactorDims(ValueError):
    """
    Raised when a leg operation needs tensor factor dimensions that are absent.
    """


class SingularMatrix(ArithmeticError):
    """
    Raised when inverting a rank-deficient matrix.
    """


def _as_scalar(value) -> ScalarQH:
    if isinstance(value, ScalarQH):
        return value
    if isinstance(value, (int, Fraction)):
        return ScalarQH(value)
    raise TypeError(f"Matrix entries must be scalars, got {type(value).__name__}.")


class RingMatrix:
    """
    Immutable dim x dim matrix of ScalarQH, optionally tagged with tensor
    factor dimensions (d1, d2) such that d1 * d2 = dim.
    """

    __slots__ = ("_entries", "_factors")

    def __init__(
        self,
        entries: np.ndarray | Sequence[Sequence[ScalarQH | int | Fraction]],
        factors: tuple[int, int] | None = None,
    ) -> None:
        rows = list(entries)
        dim = len(rows)
        if dim == 0:
            raise ValueError("Matrix must have at least one row.")
        arr = np.empty((dim, dim), dtype=object)
        for i, row in enumerate(rows):
            row = list(row)
            if len(row) != dim:
                raise ValueError("Matrix must be square.")
            for j, value in enumerate(row):
                arr[i, j] = _as_scalar(value)
        if factors is not None:
            factors = (int(factors[0]), int(factors[1]))
            if factors[0] * factors[1] != dim:
                raise ValueError(
                    f"Factor dimensions {factors} do not multiply to {dim}."
                )
        arr.flags.writeable = False
        self._entries = arr
        self._factors = factors

    ### Constructors ###

    @classmethod
    def _wrap(cls, arr: np.ndarray, factors: tuple[int, int] | None) -> RingMatrix:
        obj = cls.__new__(cls)
        arr = np.array(arr, dtype=object)
        arr.flags.writeable = False
        obj._entries = arr
        obj._factors = factors
        return obj

    @classmethod
    def identity(cls, dim: int, factors: tuple[int, int] | None = None) -> RingMatrix:
        arr = np.full((dim, dim), ZERO, dtype=object)
        for i in range(dim):
            arr[i, i] = ONE
        return cls._wrap(arr, factors)

    @classmethod
    def zeros(cls, dim: int, factors: tuple[int, int] | None = None) -> RingMatrix:
        return cls._wrap(np.full((dim, dim), ZERO, dtype=object), factors)

    @classmethod
    def from_sparse(
        cls,
        dim: int,
        values: Mapping[tuple[int, int], ScalarQH | int | Fraction],
        factors: tuple[int, int] | None = None,
    ) -> RingMatrix:
        """
        Build from a map of 0-based (row, col) positions to entries; entries
        with the same position must not repeat.
        """
        arr = np.full((dim, dim), ZERO, dtype=object)
        for (i, j), value in values.items():
            arr[i, j] = _as_scalar(value)
        return cls._wrap(arr, factors)

    ### Access ###

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def factors(self) -> tuple[int, int] | None:
        return self._factors

    @property
    def entries(self) -> np.ndarray:
        """
        Get the read-only object array (0-based indexing).
        """
        return self._entries

    def __getitem__(self, index: tuple[int, int]) -> ScalarQH:
        return self._entries[index]

    def entry(self, i: int, j: int) -> ScalarQH:
        """
        Get the entry at 1-based row i and column j.
        """
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise IndexOutOfRange(f"Entry ({i}, {j}) outside 1..{self.dim}.")
        return self._entries[i - 1, j - 1]

    def with_factors(self, factors: tuple[int, int] | None) -> RingMatrix:
        if factors is not None and factors[0] * factors[1] != self.dim:
            raise ValueError(f"Factor dimensions {factors} do not fit {self.dim}.")
        return RingMatrix._wrap(self._entries, factors)

    def row_support(self) -> list[list[tuple[int, ScalarQH]]]:
        """
        Nonzero (column, value) pairs of every row.
        """
        return [
            [(j, value) for j, value in enumerate(row) if value]
            for row in self._entries
        ]

    def nonzero(self) -> Iterable[tuple[int, int, ScalarQH]]:
        for i, row in enumerate(self.row_support()):
            for j, value in row:
                yield i, j, value

    ### Arithmetic ###

    def _check_same_dim(self, other: RingMatrix) -> None:
        if not isinstance(other, RingMatrix):
            raise TypeError("Operand must be a RingMatrix.")
        if other.dim != self.dim:
            raise ValueError(f"Dimension mismatch: {self.dim} vs {other.dim}.")

    def _joint_factors(self, other: RingMatrix) -> tuple[int, int] | None:
        return self._factors if self._factors == other._factors else None

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        self._check_same_dim(other)
        right_rows = other.row_support()
        out = np.full((self.dim, self.dim), ZERO, dtype=object)
        for i, row in enumerate(self._entries):
            acc: dict[int, ScalarQH] = {}
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in right_rows[k]:
                    acc[j] = acc[j] + a * b if j in acc else a * b
            for j, value in acc.items():
                out[i, j] = value
        return RingMatrix._wrap(out, self._joint_factors(other))

    def __add__(self, other: RingMatrix) -> RingMatrix:
        self._check_same_dim(other)
        return RingMatrix._wrap(
            self._entries + other._entries, self._joint_factors(other)
        )

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        self._check_same_dim(other)
        return RingMatrix._wrap(
            self._entries - other._entries, self._joint_factors(other)
        )

    def __neg__(self) -> RingMatrix:
        return self.map(lambda x: -x)

    def __mul__(self, scalar: ScalarQH | int | Fraction) -> RingMatrix:
        if isinstance(scalar, RingMatrix):
            return NotImplemented
        value = _as_scalar(scalar)
        return self.map(lambda x: x * value if x else x)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if other.dim != self.dim:
            return False
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore[assignment]

    def transpose(self) -> RingMatrix:
        return RingMatrix._wrap(self._entries.T, self._factors)

    def map(self, func: Callable[[ScalarQH], ScalarQH]) -> RingMatrix:
        """
        Apply a function to every entry.
        """
        return RingMatrix._wrap(
            np.frompyfunc(func, 1, 1)(self._entries), self._factors
        )

    def subs_h(self, value: int | Fraction) -> RingMatrix:
        return self.map(lambda x: x.subs_h(value))

    def limit_q_to_1(self) -> RingMatrix:
        """
        Entrywise q -> 1 limit.
        """
        return self.map(limit_q_to_1)

    ### Comparison helpers ###

    def first_difference(self, other: RingMatrix) -> tuple[int, int, str] | None:
        """
        First (row, col) in row-major order, 1-based, where the matrices
        differ, together with the rendered difference; None if equal.
        """
        self._check_same_dim(other)
        for i in range(self.dim):
            for j in range(self.dim):
                a, b = self._entries[i, j], other._entries[i, j]
                if a is b:
                    continue
                if a != b:
                    return i + 1, j + 1, str(a - b)
        return None

    def is_identity(self) -> bool:
        return self.first_difference(RingMatrix.identity(self.dim)) is None

    ### Rendering ###

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "factors": list(self._factors) if self._factors else None,
            "entries": [[str(x) for x in row] for row in self._entries],
        }

    def to_latex(self) -> str:
        rows = [" & ".join(x.to_latex() for x in row) for row in self._entries]
        return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}"

    def __str__(self) -> str:
        width = max(len(str(x)) for x in self._entries.flat)
        return "\n".join(
            "[" + ", ".join(f"{str(x):>{width}}" for x in row) + "]"
            for row in self._entries
        )

    def __repr__(self) -> str:
        return f"RingMatrix(dim={self.dim}, factors={self._factors})"


def basis_matrix(N: int, i: int, j: int) -> RingMatrix:
    """
    Matrix unit e_ij of size N with 1-based indices.
    """
    if not (1 <= i <= N and 1 <= j <= N):
        raise IndexOutOfRange(f"Index ({i}, {j}) outside 1..{N}.")
    return RingMatrix.from_sparse(N, {(i - 1, j - 1): ONE})


def kron(A: RingMatrix, B: RingMatrix) -> RingMatrix:
    """
    Kronecker product with factor dimensions (dim A, dim B).
    """
    arr = (
        np.multiply.outer(A.entries, B.entries)
        .transpose(0, 2, 1, 3)
        .reshape(A.dim * B.dim, A.dim * B.dim)
    )
    return RingMatrix._wrap(arr, (A.dim, B.dim))


def _require_factors(M: RingMatrix, equal: bool = False) -> tuple[int, int]:
    if M.factors is None:
        raise MissingFactorDims("Matrix carries no tensor factor dimensions.")
    if equal and M.factors[0] != M.factors[1]:
        raise MissingFactorDims(
            f"Leg operation needs equal factor dimensions, got {M.factors}."
        )
    return M.factors


def partial_transpose(M: RingMatrix, leg: Literal[1, 2]) -> RingMatrix:
    """
    Transpose the first or second tensor leg.
    """
    d1, d2 = _require_factors(M)
    arr = M.entries.reshape(d1, d2, d1, d2)
    if leg == 1:
        arr = arr.swapaxes(0, 2)
    elif leg == 2:
        arr = arr.swapaxes(1, 3)
    else:
        raise ValueError(f"Leg must be 1 or 2, got {leg}.")
    return RingMatrix._wrap(arr.reshape(M.dim, M.dim), M.factors)


def swap_legs(M: RingMatrix) -> RingMatrix:
    """
    M_21 = P M P with P the flip of two equal legs.
    """
    d, _ = _require_factors(M, equal=True)
    arr = M.entries.reshape(d, d, d, d).transpose(1, 0, 3, 2)
    return RingMatrix._wrap(arr.reshape(M.dim, M.dim), M.factors)


def flip_matrix(N: int) -> RingMatrix:
    """
    Flip operator P = sum_ij e_ij (x) e_ji on V (x) V.
    """
    values = {(i * N + j, j * N + i): ONE for i in range(N) for j in range(N)}
    return RingMatrix.from_sparse(N * N, values, (N, N))


def embed_three(M: RingMatrix, slot: Literal[12, 13, 23], N: int) -> RingMatrix:
    """
    Place a two-leg operator on legs ``slot`` of V (x) V (x) V.
    """
    if M.factors != (N, N):
        raise MissingFactorDims(f"Expected factor dimensions ({N}, {N}).")
    if slot not in (12, 13, 23):
        raise ValueError(f"Slot must be 12, 13 or 23, got {slot}.")
    values: dict[tuple[int, int], ScalarQH] = {}
    for r, c, value in M.nonzero():
        a1, a2 = divmod(r, N)
        b1, b2 = divmod(c, N)
        for k in range(N):
            if slot == 12:
                row, col = (a1, a2, k), (b1, b2, k)
            elif slot == 13:
                row, col = (a1, k, a2), (b1, k, b2)
            else:
                row, col = (k, a1, a2), (k, b1, b2)
            values[_flat(row, N), _flat(col, N)] = value
    return RingMatrix.from_sparse(N**3, values)


def _flat(index: tuple[int, int, int], N: int) -> int:
    return (index[0] * N + index[1]) * N + index[2]


def row_reduce(matrix: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """
    Reduced row echelon form over ScalarQH.

    Arguments:
        matrix (np.ndarray): Rectangular object array of scalars.

    Returns:
        tuple[np.ndarray, list[int]]: The reduced matrix (same shape, pivot
        rows first) and the pivot column of each nonzero row.
    """
    m = [list(row) for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c]:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        if fp != 1:
            inv = fp.inverse()
            m[piv_r] = [x * inv if x else x for x in m[piv_r]]
        pivot_row = m[piv_r]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if not fr:
                continue
            m[r] = [x - fr * y if y else x for x, y in zip(m[r], pivot_row)]
        pivots.append(piv_c)
        piv_r += 1
    out = np.empty((n_rows, n_cols), dtype=object)
    for i, row in enumerate(m):
        for j, value in enumerate(row):
            out[i, j] = value
    return out, pivots


def nullspace(matrix: np.ndarray) -> list[list[ScalarQH]]:
    """
    Basis of the right kernel, one vector per free column (free entry 1).
    """
    n_cols = matrix.shape[1]
    reduced, pivots = row_reduce(matrix)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vector = [ZERO] * n_cols
        vector[f] = ONE
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r, f]
        basis.append(vector)
    return basis


def invert(M: RingMatrix) -> RingMatrix:
    """
    Exact inverse by Gauss-Jordan elimination; the product with M is checked.
    """
    d = M.dim
    augmented = np.empty((d, 2 * d), dtype=object)
    augmented[:, :d] = M.entries
    augmented[:, d:] = RingMatrix.identity(d).entries
    reduced, pivots = row_reduce(augmented)
    if pivots[:d] != list(range(d)):
        raise SingularMatrix(f"Matrix of dimension {d} is singular.")
    inverse = RingMatrix._wrap(reduced[:, d:], M.factors)
    if not (M @ inverse).is_identity():
        raise SingularMatrix("Inverse check M @ M^-1 = I failed.")
    return inverse
