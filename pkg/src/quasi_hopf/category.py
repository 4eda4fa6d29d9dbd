"""
The monoidal category of finite-dimensional left modules over a quasi-Hopf algebra.

Objects are :class:`Module` leaves or bracketed pairs of objects, so ``(U⊗V)⊗W`` is
``((U, V), W)``. A morphism is a positional :class:`~quasi_hopf.tensor.LinearMap` with one
input axis per leaf of the source and one output axis per leaf of the target. The unit
object ``k`` has no axes: ``ev`` has no outputs, ``coev`` has no inputs and the unitors
are identities.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import TypeAlias

import numpy as np

from .algebra import QuasiHopfAlgebra, fresh
from .exceptions import PreconditionError, ShapeError
from .report import VerificationReport
from .tensor import LinearMap, Tensor, as_exact, contract, zeros

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Module:
    """A left ``H``-module; ``action[h, m, n]`` is the coefficient of ``v_n`` in ``e_h·v_m``."""

    action: np.ndarray
    name: str = field(default="", kw_only=True)

    def __post_init__(self) -> None:
        action = as_exact(self.action)
        if action.ndim != 3 or action.shape[1] != action.shape[2]:
            raise ShapeError(f"module action has shape {action.shape}, expected (dim H, n, n)")
        action.flags.writeable = False
        object.__setattr__(self, "action", action)

    @property
    def dim(self) -> int:
        return int(self.action.shape[1])


Object: TypeAlias = "Module | tuple[Object, Object]"


def leaves(obj: Object) -> list[Module]:
    if isinstance(obj, Module):
        return [obj]
    left, right = obj
    return leaves(left) + leaves(right)


def dims(*objects: Object) -> tuple[int, ...]:
    return tuple(leaf.dim for obj in objects for leaf in leaves(obj))


def regular_module(A: QuasiHopfAlgebra) -> Module:
    """``H`` acting on itself by left multiplication."""
    return Module(A.mult, name="regular")


def trivial_module(A: QuasiHopfAlgebra) -> Module:
    """The unit object ``k`` with ``h·1 = ε(h)``, as a one-dimensional leaf."""
    return Module(A.counit.reshape(A.dim, 1, 1), name="k")


class ModuleCategory:
    """
    Evaluator for the structure maps of ``_H M``.

    Args:
        A: The quasi-Hopf algebra acting on every object
        R: Optional R-matrix on legs ``"1"``, ``"2"``; enables :meth:`braiding`
    """

    def __init__(self, A: QuasiHopfAlgebra, R: Tensor | None = None) -> None:
        self.A = A
        self.R = None if R is None else R.order(("1", "2"))

    # -- actions ----------------------------------------------------------------------------

    def action_of(
        self, x: Tensor, legs: Sequence[str], objects: Sequence[Object], extra: Sequence[str] = ()
    ) -> LinearMap:
        """
        The map ``v ↦ x·v`` on ``objects[0]⊗objects[1]⊗...``.

        Leg ``legs[i]`` of ``x`` acts on ``objects[i]``; bracketed objects receive the
        matching iterated coproduct of that leg.

        Args:
            x: Element of ``H^{⊗n}``, possibly with further legs listed in ``extra``
            legs: One leg of ``x`` per object
            objects: The objects acted on
            extra: Legs of ``x`` kept as leading inputs of the map

        Returns:
            Map with inputs ``extra`` followed by the leaves of ``objects``
        """
        if len(legs) != len(objects):
            raise ShapeError(f"{len(legs)} legs for {len(objects)} objects")
        placed: list[tuple[str, Module]] = []
        for leg, obj in zip(legs, objects, strict=True):
            x = self._split(x, leg, obj, placed)
        inputs, outputs = [], []
        for leg, module in placed:
            m_in, m_out = fresh("m"), fresh("n")
            x = contract(x, Tensor(("~h", m_in, m_out), module.action), [(leg, "~h")])
            inputs.append(m_in)
            outputs.append(m_out)
        return LinearMap.from_tensor(x, list(extra) + inputs, outputs)

    def _split(self, x: Tensor, leg: str, obj: Object, placed: list[tuple[str, Module]]) -> Tensor:
        if isinstance(obj, Module):
            placed.append((leg, obj))
            return x
        left, right = fresh("l"), fresh("r")
        x = self.A.delta(x, leg, left, right)
        x = self._split(x, left, obj[0], placed)
        return self._split(x, right, obj[1], placed)

    def representation(self, obj: Object) -> LinearMap:
        """``(h, v) ↦ e_h·v`` with the basis index ``h`` as the first input."""
        return self.action_of(self.A.universal("~e", "~x"), ["~x"], [obj], extra=["~e"])

    def tensor(self, *modules: Module, name: str = "") -> Module:
        """Left-nested tensor product flattened to a single leaf (row-major basis)."""
        obj: Object = modules[0]
        for module in modules[1:]:
            obj = (obj, module)
        rep = self.representation(obj)
        size = int(np.prod(dims(obj), dtype=int))
        action = rep.data.reshape((self.A.dim, size, size))
        return Module(action, name=name or "⊗".join(m.name or "?" for m in modules))

    def identity(self, *objects: Object) -> LinearMap:
        return LinearMap.identity(dims(*objects))

    # -- monoidal structure -----------------------------------------------------------------

    def associator(self, U: Object, V: Object, W: Object) -> LinearMap:
        """``a_{U,V,W}((u⊗v)⊗w) = ΣX¹·u⊗(X²·v⊗X³·w)``."""
        return self.action_of(self.A.Phi("1", "2", "3"), ("1", "2", "3"), (U, V, W))

    def associator_inv(self, U: Object, V: Object, W: Object) -> LinearMap:
        return self.action_of(self.A.Phi_inv("1", "2", "3"), ("1", "2", "3"), (U, V, W))

    def left_unitor(self, V: Object) -> LinearMap:
        """``l_V: k⊗V → V`` with ``k`` as a one-dimensional leaf."""
        identity = self.identity(V)
        return LinearMap(identity.data.reshape((1, *identity.data.shape)), identity.n_in + 1)

    def right_unitor(self, V: Object) -> LinearMap:
        identity = self.identity(V)
        n = identity.n_in
        data = np.expand_dims(identity.data, n)
        return LinearMap(data, n + 1)

    # -- rigidity ---------------------------------------------------------------------------

    def dual(self, V: Module) -> Module:
        """``V*`` with ``(h·ξ)(v) = ξ(S(h)·v)``."""
        action = np.tensordot(self.A.antipode, np.transpose(V.action, (0, 2, 1)), axes=(1, 0))
        return Module(np.asarray(action, dtype=object), name=f"{V.name}*")

    def ev(self, V: Module) -> LinearMap:
        """``ev(ξ⊗v) = ξ(α·v)`` on ``V*⊗V``."""
        data = np.tensordot(self.A.alpha, V.action, axes=(0, 0)).T
        return LinearMap(np.asarray(data, dtype=object), 2)

    def coev(self, V: Module) -> LinearMap:
        """``coev(1) = Σβ·v_i ⊗ v^i`` in ``V⊗V*``."""
        data = np.tensordot(self.A.beta, V.action, axes=(0, 0)).T
        return LinearMap(np.asarray(data, dtype=object), 0)

    # -- braiding ---------------------------------------------------------------------------

    def braiding(self, U: Object, V: Object) -> LinearMap:
        """``c_{U,V}(u⊗v) = ΣR²·v ⊗ R¹·u``."""
        if self.R is None:
            raise PreconditionError("a braiding needs an R-matrix")
        acted = self.action_of(self.R, ("1", "2"), (U, V))
        n_u, n_v = len(leaves(U)), len(leaves(V))
        sigma = [n_u + k for k in range(1, n_v + 1)] + list(range(1, n_u + 1))
        return acted.permute_outputs(sigma)

    def braiding_inv(self, U: Object, V: Object) -> LinearMap:
        """``c⁻¹_{U,V}: V⊗U → U⊗V``, ``v⊗u ↦ Σr¹·u ⊗ r²·v`` with ``R⁻¹ = r¹⊗r²``."""
        if self.R is None:
            raise PreconditionError("a braiding needs an R-matrix")
        R_inv = self.A.inverse_element(self.R, ("1", "2"))
        acted = self.action_of(R_inv, ("1", "2"), (U, V))
        n_u, n_v = len(leaves(U)), len(leaves(V))
        sigma = [n_u + k for k in range(1, n_v + 1)] + list(range(1, n_u + 1))
        return acted.permute_inputs(sigma)

    # -- checks -----------------------------------------------------------------------------

    def is_morphism(self, f: LinearMap, source: Object, target: Object) -> tuple[LinearMap, LinearMap]:
        """Both sides of ``f(h·v) = h·f(v)``, each with the basis index ``h`` as first input."""
        lhs = f.compose(self.representation(source))
        lifted = LinearMap.identity((self.A.dim,)).tensor(f)
        rhs = self.representation(target).compose(lifted)
        return lhs, rhs

    def check_module(self, V: Module) -> VerificationReport:
        """Associativity and unitality of the action."""
        report = VerificationReport("module")
        act = Tensor(("a", "m", "n"), V.action)
        lhs = contract(Tensor(("a", "b", "c"), self.A.mult), act.relabel(a="c"), [("c", "c")])
        inner = act.relabel(a="b", n="k")
        rhs = contract(inner, act.relabel(m="k"), [("k", "k")])
        report.check("action-associative", "(ab)·v = a·(b·v)", lhs, rhs)
        unit = contract(Tensor(("a",), self.A.unit), act, [("a", "a")])
        identity = LinearMap.identity((V.dim,)).to_tensor(("m",), ("n",))
        report.check("action-unital", "1·v = v", unit, identity)
        return report

    def check_rigidity(self, V: Module) -> VerificationReport:
        """
        Snake identities for the left dual ``(V*, ev, coev)``.

        Reported entries: ``ev-linear``, ``coev-linear``, ``rigidity-right`` for
        ``(id⊗ev)∘a_{V,V*,V}∘(coev⊗id) = id_V`` and ``rigidity-left`` for
        ``(ev⊗id)∘a⁻¹_{V*,V,V*}∘(id⊗coev) = id_{V*}``.
        """
        report = VerificationReport("rigidity")
        D = self.dual(V)
        trivial = trivial_module(self.A)
        ev, coev = self.ev(V), self.coev(V)

        # k appears as a one-dimensional leaf for the linearity checks
        ev_k = LinearMap(ev.data.reshape((D.dim, V.dim, 1)), 2)
        coev_k = LinearMap(coev.data.reshape((1, V.dim, D.dim)), 1)
        report.check("ev-linear", "ev(h·(ξ⊗v)) = ε(h)ev(ξ⊗v)", *self.is_morphism(ev_k, (D, V), trivial))
        report.check("coev-linear", "h·coev(1) = ε(h)coev(1)", *self.is_morphism(coev_k, trivial, (V, D)))

        identity_v = self.identity(V)
        identity_d = self.identity(D)
        lhs = identity_v.tensor(ev) @ self.associator(V, D, V) @ coev.tensor(identity_v)
        report.check("rigidity-right", "(id⊗ev)∘a∘(coev⊗id) = id_V", lhs, identity_v)
        lhs = ev.tensor(identity_d) @ self.associator_inv(D, V, D) @ identity_d.tensor(coev)
        report.check("rigidity-left", "(ev⊗id)∘a⁻¹∘(id⊗coev) = id_V*", lhs, identity_d)
        logger.debug(f"Rigidity of {V.name or 'module'}: {report.summary()}")
        return report

    def check_coherence(self, U: Module, V: Module, W: Module, X: Module) -> VerificationReport:
        """Pentagon and triangle identities, plus naturality of ``a`` in ``H``-linearity form."""
        report = VerificationReport("coherence")
        lhs = self.associator(U, V, (W, X)) @ self.associator((U, V), W, X)
        rhs = (
            self.identity(U).tensor(self.associator(V, W, X))
            @ self.associator(U, (V, W), X)
            @ self.associator(U, V, W).tensor(self.identity(X))
        )
        report.check("pentagon-maps", "a_{U,V,W⊗X}∘a_{U⊗V,W,X} = (id⊗a)∘a∘(a⊗id)", lhs, rhs)

        k = trivial_module(self.A)
        lhs = self.identity(U).tensor(self.left_unitor(V)) @ self.associator(U, k, V)
        rhs = self.right_unitor(U).tensor(self.identity(V))
        report.check("triangle", "(id⊗l)∘a_{U,k,V} = r⊗id", lhs, rhs)

        lhs, rhs = self.is_morphism(self.associator(U, V, W), ((U, V), W), (U, (V, W)))
        report.check("associator-linear", "a_{U,V,W} is H-linear", lhs, rhs)
        return report

    def check_braiding(self, U: Module, V: Module, W: Module) -> VerificationReport:
        """Hexagons, invertibility and ``H``-linearity of the R-braiding."""
        report = VerificationReport("braiding")
        c = self.braiding
        lhs, rhs = self.is_morphism(c(U, V), (U, V), (V, U))
        report.check("braiding-linear", "c(h·(u⊗v)) = h·c(u⊗v)", lhs, rhs)
        report.check("braiding-inverse", "c⁻¹∘c = id", self.braiding_inv(U, V) @ c(U, V), self.identity(U, V))

        lhs = self.associator(V, W, U) @ c(U, (V, W)) @ self.associator(U, V, W)
        rhs = (
            self.identity(V).tensor(c(U, W))
            @ self.associator(V, U, W)
            @ c(U, V).tensor(self.identity(W))
        )
        report.check("hexagon-1", "a∘c_{U,V⊗W}∘a = (id⊗c)∘a∘(c⊗id)", lhs, rhs)
        lhs = self.associator_inv(W, U, V) @ c((U, V), W) @ self.associator_inv(U, V, W)
        rhs = (
            c(U, W).tensor(self.identity(V))
            @ self.associator_inv(U, W, V)
            @ self.identity(U).tensor(c(V, W))
        )
        report.check("hexagon-2", "a⁻¹∘c_{U⊗V,W}∘a⁻¹ = (c⊗id)∘a⁻¹∘(id⊗c)", lhs, rhs)
        return report


def category_ops(A: QuasiHopfAlgebra, R: Tensor | None = None) -> ModuleCategory:
    """Structure-map evaluator of ``_H M``; braided when ``R`` is given."""
    return ModuleCategory(A, R)


def direct_sum(*modules: Module, name: str = "") -> Module:
    """Block-diagonal action on ``M₁⊕M₂⊕...``."""
    d = modules[0].action.shape[0]
    total = sum(m.dim for m in modules)
    action = zeros((d, total, total))
    offset = 0
    for m in modules:
        action[:, offset : offset + m.dim, offset : offset + m.dim] = m.action
        offset += m.dim
    return Module(action, name=name)


def element_matrix(x: Tensor, leg: str, V: Module) -> np.ndarray:
    """``[m, n]`` matrix of ``v ↦ x·v`` for an element ``x`` of ``H`` on ``leg``."""
    return contract(x, Tensor(("~h", "m", "n"), V.action), [(leg, "~h")]).order(("m", "n")).data

