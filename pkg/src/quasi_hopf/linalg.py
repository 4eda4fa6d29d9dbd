"""Exact linear algebra over QQ, delegated to sympy's DomainMatrix."""

import logging
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import NotInvertibleError, ShapeError
from .tensor import ZERO, LinearMap, as_exact, zeros

logger = logging.getLogger(__name__)


def to_domain_matrix(matrix: np.ndarray) -> DomainMatrix:
    """Convert a 2-d array of Fractions to a DomainMatrix over QQ."""
    matrix = np.asarray(matrix, dtype=object)
    if matrix.ndim != 2:
        raise ShapeError(f"expected a 2-d array, got shape {matrix.shape}")
    rows = [[_to_qq(entry) for entry in row] for row in matrix]
    return DomainMatrix(rows, matrix.shape, QQ)


def from_domain_matrix(dm: DomainMatrix) -> np.ndarray:
    n_rows, n_cols = dm.shape
    out = zeros((n_rows, n_cols))
    sympy_matrix = dm.to_Matrix()
    for i in range(n_rows):
        for j in range(n_cols):
            entry = sympy_matrix[i, j]
            out[i, j] = Fraction(int(entry.p), int(entry.q))
    return out


def _to_qq(entry: Fraction | int) -> object:
    entry = Fraction(entry)
    return QQ(entry.numerator, entry.denominator)


def rref(matrix: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    matrix = np.asarray(matrix, dtype=object)
    if matrix.shape[0] == 0:
        return matrix.copy(), ()
    reduced, pivots = to_domain_matrix(matrix).rref()
    return from_domain_matrix(reduced), tuple(int(p) for p in pivots)


def rank(matrix: np.ndarray) -> int:
    matrix = np.asarray(matrix, dtype=object)
    if matrix.size == 0:
        return 0
    return len(rref(matrix)[1])


def nullspace_matrix(matrix: np.ndarray) -> list[np.ndarray]:
    """
    Basis of the kernel of a 2-d matrix.

    The basis is returned as the rows of the reduced echelon form of the kernel, so the
    same kernel always yields the same vectors.

    Args:
        matrix: Array with one row per equation and one column per unknown

    Returns:
        List of 1-d arrays of Fractions, empty when the kernel is trivial
    """
    matrix = np.asarray(matrix, dtype=object)
    n_cols = matrix.shape[1]
    reduced, pivots = rref(matrix)
    free = [j for j in range(n_cols) if j not in pivots]
    if not free:
        return []
    kernel = zeros((len(free), n_cols))
    for k, j in enumerate(free):
        kernel[k, j] = Fraction(1)
        for row, p in enumerate(pivots):
            kernel[k, p] = -reduced[row, j]
    canonical, _ = rref(kernel)
    basis = [canonical[k].copy() for k in range(len(free))]
    logger.debug(f"Kernel of a {matrix.shape[0]}x{n_cols} system has dimension {len(basis)}")
    return basis


def nullspace(M: LinearMap) -> list[np.ndarray]:
    """
    Exact basis of ``{v : M v = 0}``.

    Args:
        M: Linear map; its inputs (and outputs) are flattened

    Returns:
        Basis vectors shaped like the inputs of ``M``, in reduced echelon order
    """
    return [vector.reshape(M.in_dims) for vector in nullspace_matrix(M.matrix())]


def inverse(matrix: np.ndarray) -> np.ndarray:
    """
    Inverse of a square matrix.

    Raises:
        ShapeError: If the matrix is not square
        NotInvertibleError: If the matrix is singular
    """
    matrix = np.asarray(matrix, dtype=object)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ShapeError(f"cannot invert a matrix of shape {matrix.shape}")
    if matrix.shape[0] == 0:
        return matrix.copy()
    dm = to_domain_matrix(matrix)
    if dm.rank() != matrix.shape[0]:
        raise NotInvertibleError(f"matrix of size {matrix.shape[0]} is singular")
    return from_domain_matrix(dm.inv())


def inverse_map(M: LinearMap) -> LinearMap:
    """Inverse of a linear map whose input and output spaces have the same size."""
    return LinearMap.from_matrix(inverse(M.matrix()), M.out_dims, M.in_dims)


def solve(matrix: np.ndarray, rhs: Sequence[Fraction]) -> np.ndarray:
    """Solution of ``matrix @ x = rhs`` for an invertible square matrix."""
    inv = inverse(matrix)
    return np.asarray(inv.dot(as_exact(rhs)), dtype=object)


def span_contains(basis: Sequence[np.ndarray], vector: np.ndarray) -> bool:
    """Whether ``vector`` lies in the span of ``basis``."""
    flat = [np.asarray(b, dtype=object).reshape(-1) for b in basis]
    vector = np.asarray(vector, dtype=object).reshape(-1)
    if not flat:
        return not np.asarray(vector != ZERO, dtype=bool).any()
    stacked = np.stack(flat)
    return rank(np.vstack([stacked, vector[None, :]])) == rank(stacked)


def coordinates(basis: Sequence[np.ndarray], vector: np.ndarray) -> np.ndarray:
    """
    Coefficients of ``vector`` in a linearly independent ``basis``.

    Raises:
        NotInvertibleError: If the basis is dependent or ``vector`` lies outside its span
    """
    columns = np.stack([np.asarray(b, dtype=object).reshape(-1) for b in basis]).T
    k = columns.shape[1]
    augmented = np.hstack([columns, np.asarray(vector, dtype=object).reshape(-1, 1)])
    reduced, pivots = rref(augmented)
    if k in pivots:
        raise NotInvertibleError("vector is not in the span of the basis")
    if pivots != tuple(range(k)):
        raise NotInvertibleError("basis vectors are linearly dependent")
    return np.asarray(reduced[:k, k], dtype=object).copy()
