"""
Exact rational tensors with labeled legs.

Every structure constant, element of ``H^{⊗n}``, action and coaction in the package
is a dense numpy array of ``fractions.Fraction`` objects. Two views are offered:

* :class:`Tensor` names its legs, which keeps long Sweedler-style formulas readable.
* :class:`LinearMap` is positional (input axes first, then output axes) and is used
  for compositions in the module category.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .exceptions import ShapeError

logger = logging.getLogger(__name__)

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

_to_fraction = np.vectorize(Fraction, otypes=[object])


def scalar(value: Any) -> Fraction:
    """Coerce an int, a Fraction or a ``"p/q"`` string to a Scalar."""
    return Fraction(value)


def as_exact(data: Any) -> np.ndarray:
    """Return an object-dtype copy of ``data`` whose entries are all Fractions."""
    array = np.asarray(data, dtype=object)
    if array.size == 0:
        return array.copy()
    return _to_fraction(array)


def zeros(shape: Sequence[int]) -> np.ndarray:
    return np.full(tuple(shape), ZERO, dtype=object)


def identity_matrix(dim: int) -> np.ndarray:
    out = zeros((dim, dim))
    for i in range(dim):
        out[i, i] = ONE
    return out


def unit_vector(dim: int, index: int) -> np.ndarray:
    out = zeros((dim,))
    out[index] = ONE
    return out


def first_difference(lhs: np.ndarray, rhs: np.ndarray) -> tuple[int, ...] | None:
    """Lexicographically smallest index where two equally shaped arrays differ."""
    differs = np.asarray(lhs != rhs, dtype=bool)
    if not differs.any():
        return None
    return tuple(int(i) for i in np.argwhere(differs)[0])


@dataclass(frozen=True, eq=False)
class Tensor:
    """Dense exact tensor whose legs carry unique string labels."""

    legs: tuple[str, ...]
    data: np.ndarray

    def __post_init__(self) -> None:
        legs = tuple(self.legs)
        object.__setattr__(self, "legs", legs)
        data = self.data if isinstance(self.data, np.ndarray) and self.data.dtype == object else as_exact(self.data)
        if data.ndim != len(legs):
            raise ShapeError(f"tensor with legs {legs} has {data.ndim} axes")
        if len(set(legs)) != len(legs):
            raise ShapeError(f"duplicate leg labels in {legs}")
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def dims(self) -> dict[str, int]:
        return dict(zip(self.legs, self.data.shape, strict=True))

    def dim(self, leg: str) -> int:
        return self.data.shape[self.axis(leg)]

    def axis(self, leg: str) -> int:
        try:
            return self.legs.index(leg)
        except ValueError:
            raise ShapeError(f"unknown leg '{leg}' (legs: {self.legs})") from None

    def order(self, legs: Sequence[str]) -> Tensor:
        """Transpose so that the legs appear in the given order."""
        legs = tuple(legs)
        if sorted(legs) != sorted(self.legs):
            raise ShapeError(f"cannot reorder legs {self.legs} as {legs}")
        if legs == self.legs:
            return self
        return Tensor(legs, np.transpose(self.data, [self.axis(leg) for leg in legs]))

    def relabel(self, mapping: Mapping[str, str] | None = None, **renames: str) -> Tensor:
        mapping = {**(mapping or {}), **renames}
        for leg in mapping:
            self.axis(leg)
        return Tensor(tuple(mapping.get(leg, leg) for leg in self.legs), self.data)

    def scale(self, factor: Fraction | int) -> Tensor:
        return Tensor(self.legs, self.data * Fraction(factor))

    def __add__(self, other: Tensor) -> Tensor:
        other = _aligned(self, other)
        return Tensor(self.legs, self.data + other.data)

    def __sub__(self, other: Tensor) -> Tensor:
        other = _aligned(self, other)
        return Tensor(self.legs, self.data - other.data)

    def __neg__(self) -> Tensor:
        return Tensor(self.legs, -self.data)

    def is_zero(self) -> bool:
        return not np.asarray(self.data != ZERO, dtype=bool).any()

    def item(self) -> Fraction:
        """Value of an order-0 tensor."""
        if self.legs:
            raise ShapeError(f"tensor with legs {self.legs} is not a scalar")
        return Fraction(self.data[()])

    def nonzero(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        for index in np.argwhere(np.asarray(self.data != ZERO, dtype=bool)):
            key = tuple(int(i) for i in index)
            yield key, self.data[key]

    def flat(self) -> list[Fraction]:
        return list(self.data.reshape(-1))


def _aligned(reference: Tensor, other: Tensor) -> Tensor:
    if sorted(reference.legs) != sorted(other.legs):
        raise ShapeError(f"leg signatures differ: {reference.legs} vs {other.legs}")
    other = other.order(reference.legs)
    if other.shape != reference.shape:
        raise ShapeError(f"dimensions differ on legs {reference.legs}: {reference.shape} vs {other.shape}")
    return other


def element(vector: Any, *legs: str) -> Tensor:
    """Wrap raw coefficients (e.g. an element of ``H⊗H``) as a tensor with the given legs."""
    return Tensor(legs, as_exact(vector))


def identity(in_leg: str, out_leg: str, dim: int) -> Tensor:
    """The identity map, read as the universal element ``e_i ↦ e_i``."""
    return Tensor((in_leg, out_leg), identity_matrix(dim))


def constant(value: Fraction | int) -> Tensor:
    return Tensor((), as_exact(value))


def contract(t: Tensor, u: Tensor, pairs: Iterable[tuple[str, str]]) -> Tensor:
    """
    Contract paired legs of two tensors.

    Args:
        t: Left tensor
        u: Right tensor
        pairs: ``(leg of t, leg of u)`` pairs summed over

    Returns:
        The contraction; the remaining legs of ``t`` come first, then those of ``u``

    Raises:
        ShapeError: On unknown labels, unequal paired dimensions or clashing remaining labels
    """
    pairs = list(pairs)
    t_axes = [t.axis(a) for a, _ in pairs]
    u_axes = [u.axis(b) for _, b in pairs]
    for (a, b), i, j in zip(pairs, t_axes, u_axes, strict=True):
        if t.shape[i] != u.shape[j]:
            raise ShapeError(f"cannot contract leg '{a}' ({t.shape[i]}) with '{b}' ({u.shape[j]})")
    paired_t = {a for a, _ in pairs}
    paired_u = {b for _, b in pairs}
    legs = tuple(leg for leg in t.legs if leg not in paired_t) + tuple(leg for leg in u.legs if leg not in paired_u)
    data = np.tensordot(t.data, u.data, axes=(t_axes, u_axes)) if pairs else np.multiply.outer(t.data, u.data)
    return Tensor(legs, np.asarray(data, dtype=object))


def kron(*tensors: Tensor) -> Tensor:
    """Outer product; legs are concatenated in argument order."""
    if not tensors:
        return constant(ONE)
    result = tensors[0]
    for factor in tensors[1:]:
        result = contract(result, factor, [])
    return result


def permute(t: Tensor, sigma: Sequence[int]) -> Tensor:
    """
    Reorder tensor factors while the labels keep their positions.

    Position ``k`` (1-based) of the result holds old factor ``sigma[k]``, so
    ``permute(x⊗y⊗z, (3, 1, 2))`` is ``z⊗x⊗y``.

    Raises:
        ShapeError: If ``sigma`` is not a permutation of the legs
    """
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(t.legs) + 1)):
        raise ShapeError(f"{sigma} is not a permutation of {len(t.legs)} legs")
    return Tensor(t.legs, np.transpose(t.data, [s - 1 for s in sigma]))


def embed(t: Tensor, positions: Sequence[int], legs: Sequence[str], fill: np.ndarray) -> Tensor:
    """
    Place the factors of ``t`` at the given 1-based positions and ``fill`` everywhere else.

    This realizes leg-subscript notation: ``R_{13}`` is ``embed(R, (1, 3), legs, unit)``
    and ``Φ_{312}`` is ``embed(Φ, (3, 1, 2), legs, unit)``.
    """
    positions = tuple(positions)
    legs = tuple(legs)
    if len(positions) != len(t.legs) or len(set(positions)) != len(positions):
        raise ShapeError(f"positions {positions} do not match {len(t.legs)} legs")
    if any(p < 1 or p > len(legs) for p in positions):
        raise ShapeError(f"positions {positions} out of range for {len(legs)} legs")
    data = t.data
    for _ in range(len(legs) - len(positions)):
        data = np.multiply.outer(data, fill)
    source = list(positions) + [p for p in range(1, len(legs) + 1) if p not in positions]
    axes = [source.index(p) for p in range(1, len(legs) + 1)]
    return Tensor(legs, np.transpose(np.asarray(data, dtype=object), axes))


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Positional linear map; ``data`` has the input axes first, then the output axes."""

    data: np.ndarray
    n_in: int

    def __post_init__(self) -> None:
        data = self.data if isinstance(self.data, np.ndarray) and self.data.dtype == object else as_exact(self.data)
        if not 0 <= self.n_in <= data.ndim:
            raise ShapeError(f"{self.n_in} inputs for an array with {data.ndim} axes")
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    @property
    def in_dims(self) -> tuple[int, ...]:
        return self.data.shape[: self.n_in]

    @property
    def out_dims(self) -> tuple[int, ...]:
        return self.data.shape[self.n_in :]

    @classmethod
    def identity(cls, dims: Sequence[int]) -> LinearMap:
        dims = tuple(dims)
        size = int(np.prod(dims, dtype=int))
        return cls(identity_matrix(size).reshape(dims + dims), len(dims))

    @classmethod
    def from_tensor(cls, t: Tensor, inputs: Sequence[str], outputs: Sequence[str]) -> LinearMap:
        return cls(t.order(tuple(inputs) + tuple(outputs)).data, len(inputs))

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, in_dims: Sequence[int], out_dims: Sequence[int]) -> LinearMap:
        """Build from a 2-d array with rows indexed by flattened outputs."""
        return cls(np.asarray(matrix, dtype=object).T.reshape(tuple(in_dims) + tuple(out_dims)), len(in_dims))

    def to_tensor(self, inputs: Sequence[str], outputs: Sequence[str]) -> Tensor:
        return Tensor(tuple(inputs) + tuple(outputs), self.data)

    def matrix(self) -> np.ndarray:
        """2-d array with rows indexed by flattened outputs and columns by flattened inputs."""
        rows = int(np.prod(self.out_dims, dtype=int))
        cols = int(np.prod(self.in_dims, dtype=int))
        return self.data.reshape(cols, rows).T

    def compose(self, other: LinearMap) -> LinearMap:
        """``self ∘ other``."""
        if other.out_dims != self.in_dims:
            raise ShapeError(f"cannot compose: outputs {other.out_dims} do not match inputs {self.in_dims}")
        axes = (list(range(other.n_in, other.data.ndim)), list(range(self.n_in)))
        data = np.tensordot(other.data, self.data, axes=axes) if self.n_in else np.multiply.outer(other.data, self.data)
        return LinearMap(np.asarray(data, dtype=object), other.n_in)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        return self.compose(other)

    def tensor(self, other: LinearMap) -> LinearMap:
        """``self ⊗ other`` with inputs (self, other) and outputs (self, other)."""
        outer = np.multiply.outer(self.data, other.data)
        a_in, a_all = self.n_in, self.data.ndim
        b_in = other.n_in
        axes = (
            list(range(a_in))
            + list(range(a_all, a_all + b_in))
            + list(range(a_in, a_all))
            + list(range(a_all + b_in, outer.ndim))
        )
        return LinearMap(np.transpose(np.asarray(outer, dtype=object), axes), a_in + b_in)

    def permute_outputs(self, sigma: Sequence[int]) -> LinearMap:
        """Output position ``k`` (1-based) receives old output ``sigma[k]``."""
        if sorted(sigma) != list(range(1, len(self.out_dims) + 1)):
            raise ShapeError(f"{tuple(sigma)} is not a permutation of {len(self.out_dims)} outputs")
        axes = list(range(self.n_in)) + [self.n_in + s - 1 for s in sigma]
        return LinearMap(np.transpose(self.data, axes), self.n_in)

    def permute_inputs(self, sigma: Sequence[int]) -> LinearMap:
        """Input position ``k`` (1-based) receives old input ``sigma[k]``."""
        if sorted(sigma) != list(range(1, self.n_in + 1)):
            raise ShapeError(f"{tuple(sigma)} is not a permutation of {self.n_in} inputs")
        axes = [s - 1 for s in sigma] + list(range(self.n_in, self.data.ndim))
        return LinearMap(np.transpose(self.data, axes), self.n_in)

    def reshape(self, in_dims: Sequence[int], out_dims: Sequence[int]) -> LinearMap:
        """Regroup input and output axes row-major, e.g. ``M⊗(N⊗P)`` as one flat axis."""
        in_dims, out_dims = tuple(in_dims), tuple(out_dims)
        if np.prod(in_dims, dtype=int) != np.prod(self.in_dims, dtype=int) or np.prod(
            out_dims, dtype=int
        ) != np.prod(self.out_dims, dtype=int):
            raise ShapeError(f"cannot reshape {self.in_dims}->{self.out_dims} to {in_dims}->{out_dims}")
        return LinearMap(self.data.reshape(in_dims + out_dims), len(in_dims))

    def transpose(self) -> LinearMap:
        """The dual map on coordinate duals: outputs become inputs."""
        n_out = self.data.ndim - self.n_in
        axes = list(range(self.n_in, self.data.ndim)) + list(range(self.n_in))
        return LinearMap(np.transpose(self.data, axes), n_out)

    def apply(self, vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector, dtype=object)
        if vector.shape != self.in_dims:
            raise ShapeError(f"vector of shape {vector.shape} fed to a map with inputs {self.in_dims}")
        return np.asarray(np.tensordot(vector, self.data, axes=self.n_in), dtype=object)

    def scale(self, factor: Fraction | int) -> LinearMap:
        return LinearMap(self.data * Fraction(factor), self.n_in)

    def __add__(self, other: LinearMap) -> LinearMap:
        _same_signature(self, other)
        return LinearMap(self.data + other.data, self.n_in)

    def __sub__(self, other: LinearMap) -> LinearMap:
        _same_signature(self, other)
        return LinearMap(self.data - other.data, self.n_in)


def _same_signature(f: LinearMap, g: LinearMap) -> None:
    if f.in_dims != g.in_dims or f.out_dims != g.out_dims:
        raise ShapeError(f"map signatures differ: {f.in_dims}->{f.out_dims} vs {g.in_dims}->{g.out_dims}")


@dataclass(frozen=True)
class Comparison:
    """Outcome of :func:`map_equal`; falsy on mismatch, with the first differing index."""

    equal: bool
    index: tuple[int, ...] | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    legs: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.equal


def map_equal(f: Tensor | LinearMap | np.ndarray, g: Tensor | LinearMap | np.ndarray) -> Comparison:
    """
    Exact entrywise comparison.

    Tensors are aligned by leg label, linear maps must share input and output dimensions.

    Returns:
        A :class:`Comparison`; on mismatch it holds the lexicographically first differing
        multi-index together with both values

    Raises:
        ShapeError: If the signatures differ
    """
    legs: tuple[str, ...] = ()
    if isinstance(f, Tensor) and isinstance(g, Tensor):
        g = _aligned(f, g)
        legs = f.legs
        lhs, rhs = f.data, g.data
    elif isinstance(f, LinearMap) and isinstance(g, LinearMap):
        _same_signature(f, g)
        lhs, rhs = f.data, g.data
    else:
        lhs, rhs = np.asarray(_raw(f), dtype=object), np.asarray(_raw(g), dtype=object)
        if lhs.shape != rhs.shape:
            raise ShapeError(f"shapes differ: {lhs.shape} vs {rhs.shape}")
    index = first_difference(lhs, rhs)
    if index is None:
        return Comparison(True, legs=legs)
    return Comparison(False, index, Fraction(lhs[index]), Fraction(rhs[index]), legs)


def _raw(value: Tensor | LinearMap | np.ndarray) -> np.ndarray:
    if isinstance(value, Tensor | LinearMap):
        return value.data
    return value
