"""
Quasi-bialgebras and quasi-Hopf algebras given by structure constants.

Conventions (basis ``e_0 .. e_{d-1}``):

* ``mult[i, j, k]``: coefficient of ``e_k`` in ``e_i e_j``
* ``comult[i, j, k]``: coefficient of ``e_j ⊗ e_k`` in ``Δ(e_i)``
* ``antipode[i, j]``: coefficient of ``e_j`` in ``S(e_i)``
* ``unit``, ``counit``, ``alpha``, ``beta`` are vectors; ``phi``, ``phi_inv`` are elements of ``H⊗H⊗H``

Formulas are evaluated with the leg calculus below: an element of ``H^{⊗n}`` is a
:class:`~quasi_hopf.tensor.Tensor` with ``n`` labeled legs, possibly with extra input legs
(e.g. a universal basis element ``h``), and every Sweedler expression becomes a sequence
of ``delta``, ``S``, ``mul`` and ``word`` calls on named legs.

Constant elements such as ``Φ`` or ``R`` are usually sparse. :meth:`QuasiBialgebra.expand`
sums a formula over their nonzero terms, so that only the universal legs stay open.
"""

from __future__ import annotations

import hashlib
import itertools
import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Any

import numpy as np

from .exceptions import NotInvertibleError, ShapeError
from .linalg import inverse, solve
from .tensor import ONE, ZERO, LinearMap, Tensor, as_exact, contract, element, identity, kron, unit_vector, zeros
from .utils import format_scalar

logger = logging.getLogger(__name__)

_fresh = itertools.count()

Factor = str | np.ndarray
"""A factor of :meth:`QuasiBialgebra.word`: a leg label or the coefficient vector of a constant element."""


def fresh(prefix: str = "t") -> str:
    """A leg label that cannot clash with user-chosen labels."""
    return f"~{prefix}{next(_fresh)}"


def is_sparse(t: Tensor) -> bool:
    """Fewer nonzero coefficients than entries."""
    return int(np.count_nonzero(np.asarray(t.data != ZERO, dtype=bool))) < t.data.size


def terms(constants: Sequence[Tensor]) -> Iterator[tuple[Fraction, dict[str, np.ndarray]]]:
    """
    Nonzero terms of a tensor product of constant elements.

    Yields:
        The coefficient of each term and the basis vector it places on every leg
    """
    for combination in itertools.product(*(list(c.nonzero()) for c in constants)):
        coefficient = ONE
        vectors: dict[str, np.ndarray] = {}
        for c, (index, value) in zip(constants, combination, strict=True):
            coefficient *= value
            for leg, i in zip(c.legs, index, strict=True):
                vectors[leg] = unit_vector(c.dim(leg), i)
        yield coefficient, vectors


@dataclass(frozen=True, eq=False)
class QuasiBialgebra:
    """Structure constants ``(m, 1, Δ, ε, Φ, Φ⁻¹)`` plus the leg calculus built on them."""

    mult: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    phi: np.ndarray
    phi_inv: np.ndarray
    name: str = field(default="", kw_only=True)

    def __post_init__(self) -> None:
        for name in ("mult", "unit", "comult", "counit", "phi", "phi_inv"):
            array = as_exact(getattr(self, name))
            array.flags.writeable = False
            object.__setattr__(self, name, array)
        d = self.dim
        expected = {
            "mult": (d, d, d),
            "unit": (d,),
            "comult": (d, d, d),
            "counit": (d,),
            "phi": (d, d, d),
            "phi_inv": (d, d, d),
        }
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise ShapeError(f"{name} has shape {getattr(self, name).shape}, expected {shape}")

    @property
    def dim(self) -> int:
        return int(self.unit.shape[0])

    def _arrays(self) -> tuple[tuple[str, np.ndarray], ...]:
        return (
            ("mult", self.mult),
            ("unit", self.unit),
            ("comult", self.comult),
            ("counit", self.counit),
            ("phi", self.phi),
            ("phi_inv", self.phi_inv),
        )

    @cached_property
    def fingerprint(self) -> str:
        """Content hash of the structure constants, used to key derived-element caches."""
        digest = hashlib.sha256()
        for name, array in self._arrays():
            digest.update(f"{name}{array.shape}:".encode())
            digest.update(",".join(format_scalar(x) for x in array.reshape(-1)).encode())
        return digest.hexdigest()

    # -- elements --------------------------------------------------------------------------

    def el(self, vector: Any, *legs: str) -> Tensor:
        return element(vector, *legs)

    def one(self, *legs: str) -> Tensor:
        """``1⊗...⊗1`` on the given legs."""
        return kron(*(element(self.unit, leg) for leg in legs))

    def Phi(self, a: str = "1", b: str = "2", c: str = "3") -> Tensor:
        return element(self.phi, a, b, c)

    def Phi_inv(self, a: str = "1", b: str = "2", c: str = "3") -> Tensor:
        return element(self.phi_inv, a, b, c)

    def universal(self, h: str, leg: str) -> Tensor:
        """The basis element ``e_h`` placed on ``leg``, for identities quantified over ``h``."""
        return identity(h, leg, self.dim)

    def counit_of(self, h: str) -> Tensor:
        """``ε(e_h)`` as a tensor on the input leg ``h``."""
        return element(self.counit, h)

    def times(self, *vectors: np.ndarray) -> np.ndarray:
        """Product of constant elements given by their coefficient vectors."""
        result = as_exact(vectors[0])
        for vector in vectors[1:]:
            result = np.tensordot(np.tensordot(result, self.mult, axes=(0, 0)), as_exact(vector), axes=(0, 0))
        return np.asarray(result, dtype=object)

    # -- leg calculus ----------------------------------------------------------------------

    def mul(self, t: Tensor, left: str, right: str, out: str | None = None) -> Tensor:
        """Multiply leg ``left`` by leg ``right`` (in that order); the product sits on ``out``."""
        m = Tensor(("~l", "~r", "~o"), self.mult)
        return contract(t, m, [(left, "~l"), (right, "~r")]).relabel({"~o": out or left})

    def word(self, t: Tensor, factors: Sequence[Factor], out: str) -> Tensor:
        """
        Multiply a sequence of legs and constant elements left to right into leg ``out``.

        Args:
            t: Tensor carrying the legs named in ``factors``
            factors: Leg labels or coefficient vectors of constant elements (e.g. ``alpha``)
            out: Label of the resulting leg; a word of constants only is attached as a new leg
        """
        current: str | None = None
        pending: np.ndarray | None = None
        for factor in factors:
            if isinstance(factor, str):
                if current is None:
                    current = factor
                    if pending is not None:
                        # x ↦ v·x with matrix[j, k] = Σ_i v_i mult[i, j, k]
                        t = self.apply(t, factor, np.tensordot(pending, self.mult, axes=(0, 0)))
                else:
                    t = self.mul(t, current, factor, out=current)
            elif current is None:
                pending = as_exact(factor) if pending is None else self.times(pending, factor)
            else:
                t = self.apply(t, current, np.tensordot(self.mult, as_exact(factor), axes=(1, 0)))
        if current is None:
            if pending is None:
                raise ShapeError("empty word")
            return self.attach(t, pending, out)
        return t.relabel({current: out}) if current != out else t

    def _times_element(self, t: Tensor, e: Tensor, side: str) -> Tensor:
        # t·e (side "right") or e·t (side "left") on the legs of the constant element e
        total: Tensor | None = None
        for index, value in e.nonzero():
            term = t
            for leg, i in zip(e.legs, index, strict=True):
                term = self.apply(term, leg, self.mult[:, i, :] if side == "right" else self.mult[i, :, :])
            term = term.scale(value)
            total = term if total is None else total + term
        return t.scale(0) if total is None else total

    def product(self, legs: Sequence[str], *factors: Tensor) -> Tensor:
        """
        Product in ``H^{⊗n}`` of factors that all carry ``legs``; other legs pass through.

        A factor without extra legs is multiplied in term by term over its nonzero coefficients.

        Returns:
            ``factors[0] · factors[1] · ...`` leg-wise
        """
        own = set(legs)
        result = factors[0]
        for factor in factors[1:]:
            if set(factor.legs) <= own:
                result = self._times_element(result, factor, "right")
            elif set(result.legs) <= own:
                result = self._times_element(factor, result, "left")
            else:
                renamed = {leg: fresh("p") for leg in legs}
                result = kron(result, factor.relabel(renamed))
                for leg in legs:
                    result = self.mul(result, leg, renamed[leg])
        return result

    def expand(
        self,
        t: Tensor,
        constants: Sequence[Tensor],
        build: Callable[[Tensor, dict[str, Factor]], Tensor],
    ) -> Tensor:
        """
        Evaluate a Sweedler formula in the constant elements ``constants`` applied to ``t``.

        ``build(t, factors)`` evaluates the formula for one term; ``factors`` maps every leg
        label of ``constants`` to a :data:`Factor`. Sparse constants are summed over their
        nonzero terms and appear as basis vectors; dense ones are tensored onto ``t`` and
        appear as their own leg labels. ``build`` must use each constant leg exactly once,
        through :meth:`word`.

        Returns:
            The formula summed over all terms
        """
        dense = [c for c in constants if not is_sparse(c)]
        sparse = [c for c in constants if is_sparse(c)]
        t = kron(t, *dense)
        legs: dict[str, Factor] = {leg: leg for c in dense for leg in c.legs}
        total: Tensor | None = None
        for coefficient, vectors in terms(sparse):
            term = build(t, {**legs, **vectors}).scale(coefficient)
            total = term if total is None else total + term
        if total is None:
            # a zero constant: evaluate once on zero vectors to get the legs right
            vanishing = {leg: zeros((c.dim(leg),)) for c in sparse for leg in c.legs}
            total = build(t, {**legs, **vanishing})
        return total

    def delta(self, t: Tensor, leg: str, out1: str, out2: str) -> Tensor:
        c = Tensor(("~i", out1, out2), self.comult)
        return contract(t, c, [(leg, "~i")])

    def delta_op(self, t: Tensor, leg: str, out1: str, out2: str) -> Tensor:
        """``Δ^{op}``: ``h ↦ h₂ ⊗ h₁``."""
        return self.delta(t, leg, out2, out1)

    def eps(self, t: Tensor, *legs: str) -> Tensor:
        for leg in legs:
            t = contract(t, Tensor(("~i",), self.counit), [(leg, "~i")])
        return t

    def apply(self, t: Tensor, leg: str, matrix: np.ndarray, out: str | None = None) -> Tensor:
        """Apply a linear map ``H → H`` given as ``matrix[in, out]`` to one leg."""
        f = Tensor(("~i", "~o"), matrix)
        return contract(t, f, [(leg, "~i")]).relabel({"~o": out or leg})

    def attach(self, t: Tensor, vector: Any, leg: str) -> Tensor:
        """Tensor a constant element onto a new leg."""
        return kron(t, element(vector, leg))

    def swap(self, t: Tensor, a: str, b: str) -> Tensor:
        """Exchange the contents of two legs (e.g. ``Φ`` to ``Φ^{321}`` via legs 1 and 3)."""
        tmp = fresh("s")
        return t.relabel({a: tmp}).relabel({b: a}).relabel({tmp: b})

    def multiplication_map(self, t: Tensor, legs: Sequence[str], side: str = "left") -> LinearMap:
        """Matrix of ``y ↦ t·y`` (or ``y·t``) on ``H^{⊗n}``."""
        inputs = [fresh("in") for _ in legs]
        universal = kron(*(self.universal(i, leg) for i, leg in zip(inputs, legs, strict=True)))
        prod = self.product(legs, t, universal) if side == "left" else self.product(legs, universal, t)
        return LinearMap.from_tensor(prod, inputs, legs)

    def inverse_element(self, t: Tensor, legs: Sequence[str]) -> Tensor:
        """
        Two-sided inverse of an element of ``H^{⊗n}``.

        Raises:
            NotInvertibleError: If ``t`` is not invertible
        """
        legs = tuple(legs)
        left = self.multiplication_map(t, legs, "left")
        one = self.one(*legs).order(legs).data.reshape(-1)
        try:
            solution = solve(left.matrix(), one)
        except NotInvertibleError as e:
            raise NotInvertibleError(f"element on legs {legs} is not invertible") from e
        return Tensor(legs, solution.reshape(tuple(self.dim for _ in legs)))

    def matrix_of(self, build: Any) -> np.ndarray:
        """Evaluate ``build(universal tensor on ('~h', '~x'))`` into a ``[in, out]`` matrix of a map ``H → H``."""
        t = build(self.universal("~h", "~x"))
        return t.order(("~h", "~x")).data


@dataclass(frozen=True, eq=False)
class QuasiHopfAlgebra(QuasiBialgebra):
    """A quasi-bialgebra with antipode ``S`` and the elements ``α``, ``β``."""

    antipode: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    antipode_inv: np.ndarray | None = field(default=None, kw_only=True)

    def __post_init__(self) -> None:
        super().__post_init__()
        d = self.dim
        for name, shape in (("antipode", (d, d)), ("alpha", (d,)), ("beta", (d,))):
            array = as_exact(getattr(self, name))
            if array.shape != shape:
                raise ShapeError(f"{name} has shape {array.shape}, expected {shape}")
            array.flags.writeable = False
            object.__setattr__(self, name, array)
        if self.antipode_inv is not None:
            array = as_exact(self.antipode_inv)
            if array.shape != (d, d):
                raise ShapeError(f"antipode_inv has shape {array.shape}, expected {(d, d)}")
            array.flags.writeable = False
            object.__setattr__(self, "antipode_inv", array)

    def _arrays(self) -> tuple[tuple[str, np.ndarray], ...]:
        extra = (("antipode", self.antipode), ("alpha", self.alpha), ("beta", self.beta))
        return super()._arrays() + extra

    @property
    def base(self) -> QuasiBialgebra:
        return QuasiBialgebra(
            self.mult, self.unit, self.comult, self.counit, self.phi, self.phi_inv, name=self.name
        )

    @cached_property
    def S_inverse_matrix(self) -> np.ndarray:
        """``S⁻¹`` as given in the input, or by inverting the matrix of ``S``."""
        if self.antipode_inv is not None:
            return self.antipode_inv
        logger.debug(f"Inverting the antipode of {self.name or 'algebra'}")
        # rows of the map matrix are outputs, so transpose around the inversion
        return inverse(self.antipode.T).T

    def S(self, t: Tensor, *legs: str) -> Tensor:
        for leg in legs:
            t = self.apply(t, leg, self.antipode)
        return t

    def S_inv(self, t: Tensor, *legs: str) -> Tensor:
        for leg in legs:
            t = self.apply(t, leg, self.S_inverse_matrix)
        return t

    def with_alpha_beta_normalized(self) -> QuasiHopfAlgebra:
        """Rescale ``α ↦ α/ε(α)``, ``β ↦ β/ε(β)`` when ``ε(α)ε(β) = 1``."""
        ea = self.counit.dot(self.alpha)
        eb = self.counit.dot(self.beta)
        if ea * eb != 1 or ea == 1:
            return self
        logger.info(f"Rescaling alpha by {format_scalar(1 / ea)} and beta by {format_scalar(1 / eb)}")
        return replace(self, alpha=self.alpha / ea, beta=self.beta / eb)
