"""
Algebras, coalgebras, bialgebras and Hopf algebras in the category of left Yetter-Drinfeld modules.

Structure maps are stored on the basis of the carrier:

* ``mult[a, b, c]``: coefficient of ``b_c`` in ``b_a b_b``
* ``comult[a, b, c]``: coefficient of ``b_b⊗b_c`` in ``Δ̲(b_a)``
* ``antipode[a, b]``: coefficient of ``b_b`` in ``S̲(b_a)``
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .algebra import Factor, QuasiHopfAlgebra, fresh
from .category import Module, ModuleCategory
from .derived import derive_pq, derive_twist
from .exceptions import PostCheckError, PreconditionError, ShapeError
from .report import VerificationReport
from .tensor import LinearMap, Tensor, as_exact, contract, element, identity_matrix, kron
from .yetter_drinfeld import YDModule, check_yd, coact_pair, dual_left_yd, same_module, yd_braiding

logger = logging.getLogger(__name__)


def _frozen(array: np.ndarray, shape: tuple[int, ...], what: str) -> np.ndarray:
    array = as_exact(array)
    if array.shape != shape:
        raise ShapeError(f"{what} has shape {array.shape}, expected {shape}")
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class BraidedAlgebra:
    """An algebra ``(B, m̲, 1_B)`` whose carrier is a left YD module."""

    carrier: YDModule
    mult: np.ndarray
    unit: np.ndarray
    name: str = field(default="", kw_only=True)

    def __post_init__(self) -> None:
        n = self.carrier.dim
        object.__setattr__(self, "mult", _frozen(self.mult, (n, n, n), "mult"))
        object.__setattr__(self, "unit", _frozen(self.unit, (n,), "unit"))
        if self.carrier.flavor != "left":
            raise PreconditionError("braided structures live on left YD modules")

    @property
    def H(self) -> QuasiHopfAlgebra:
        return self.carrier.algebra

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def mul(self, t: Tensor, left: str, right: str, out: str | None = None) -> Tensor:
        m = Tensor(("~l", "~r", "~o"), self.mult)
        return contract(t, m, [(left, "~l"), (right, "~r")]).relabel({"~o": out or left})

    def one(self, leg: str) -> Tensor:
        return element(self.unit, leg)

    @property
    def mult_map(self) -> LinearMap:
        return LinearMap(self.mult, 2)


@dataclass(frozen=True, eq=False)
class BraidedCoalgebra:
    """A coalgebra ``(B, Δ̲, ε̲)`` whose carrier is a left YD module."""

    carrier: YDModule
    comult: np.ndarray
    counit: np.ndarray
    name: str = field(default="", kw_only=True)

    def __post_init__(self) -> None:
        n = self.carrier.dim
        object.__setattr__(self, "comult", _frozen(self.comult, (n, n, n), "comult"))
        object.__setattr__(self, "counit", _frozen(self.counit, (n,), "counit"))
        if self.carrier.flavor != "left":
            raise PreconditionError("braided structures live on left YD modules")

    @property
    def H(self) -> QuasiHopfAlgebra:
        return self.carrier.algebra

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def delta(self, t: Tensor, leg: str, out1: str, out2: str) -> Tensor:
        return contract(t, Tensor(("~i", out1, out2), self.comult), [(leg, "~i")])

    def eps(self, t: Tensor, leg: str) -> Tensor:
        return contract(t, Tensor(("~i",), self.counit), [(leg, "~i")])

    @property
    def comult_map(self) -> LinearMap:
        return LinearMap(self.comult, 1)


@dataclass(frozen=True, eq=False)
class BraidedHopfAlgebra:
    """
    A bialgebra in ``^H_H YD`` on one carrier; a braided Hopf algebra when ``antipode`` is set.

    The leg-calculus methods mirror :class:`~quasi_hopf.algebra.QuasiBialgebra`, acting on
    legs that hold elements of ``B`` instead of ``H``.
    """

    algebra: BraidedAlgebra
    coalgebra: BraidedCoalgebra
    antipode: np.ndarray | None = None
    name: str = field(default="", kw_only=True)

    def __post_init__(self) -> None:
        a, c = self.algebra.carrier, self.coalgebra.carrier
        if a is not c and not same_module(a, c):
            raise PreconditionError("algebra and coalgebra must share one carrier")
        if self.antipode is not None:
            n = self.dim
            object.__setattr__(self, "antipode", _frozen(self.antipode, (n, n), "antipode"))

    @property
    def carrier(self) -> YDModule:
        return self.algebra.carrier

    @property
    def H(self) -> QuasiHopfAlgebra:
        return self.carrier.algebra

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def vector(self, b_in: str, leg: str) -> Tensor:
        return self.carrier.vector(b_in, leg)

    def mul(self, t: Tensor, left: str, right: str, out: str | None = None) -> Tensor:
        return self.algebra.mul(t, left, right, out)

    def one(self, leg: str) -> Tensor:
        return self.algebra.one(leg)

    def delta(self, t: Tensor, leg: str, out1: str, out2: str) -> Tensor:
        return self.coalgebra.delta(t, leg, out1, out2)

    def eps(self, t: Tensor, leg: str) -> Tensor:
        return self.coalgebra.eps(t, leg)

    def counit_of(self, b_in: str) -> Tensor:
        return element(self.coalgebra.counit, b_in)

    def S(self, t: Tensor, leg: str) -> Tensor:
        if self.antipode is None:
            raise PreconditionError(f"{self.name or 'bialgebra'} has no antipode")
        return contract(t, Tensor(("~i", "~o"), self.antipode), [(leg, "~i")]).relabel({"~o": leg})

    def act(self, t: Tensor, h_leg: str, b_leg: str) -> Tensor:
        return self.carrier.act(t, h_leg, b_leg)

    def coact(self, t: Tensor, b_leg: str, h_out: str, b_out: str | None = None) -> Tensor:
        return self.carrier.coact(t, b_leg, h_out, b_out)

    @property
    def mult_map(self) -> LinearMap:
        return self.algebra.mult_map

    @property
    def comult_map(self) -> LinearMap:
        return self.coalgebra.comult_map

    @property
    def antipode_map(self) -> LinearMap:
        if self.antipode is None:
            raise PreconditionError(f"{self.name or 'bialgebra'} has no antipode")
        return LinearMap(self.antipode, 1)


def _h_universal(H: QuasiHopfAlgebra) -> Tensor:
    return H.delta(H.universal("h", "a"), "a", "a1", "a2")



def _act_each(M: YDModule, t: Tensor, z: dict[str, Factor], legs: tuple[str, str, str]) -> Tensor:
    # ΣX¹·u⊗X²·v⊗X³·w on the three given legs
    for label, leg in zip(("X1", "X2", "X3"), legs, strict=True):
        t = M.act_by(t, [z[label]], leg)
    return t


# -- algebras and coalgebras ------------------------------------------------------------------


def check_braided_algebra(B: BraidedAlgebra) -> VerificationReport:
    """
    Verify that ``B`` is an algebra in ``^H_H YD``.

    Entries: the YD axioms of the carrier, ``quasi-associative``, ``unit-left``, ``unit-right``,
    ``module-algebra``, ``module-unit``, ``comodule-algebra`` and ``comodule-unit``.
    """
    H, M = B.H, B.carrier
    report = VerificationReport("braided-algebra").extend(check_yd(M))
    t = kron(M.vector("i", "a"), M.vector("j", "b"), M.vector("k", "c"))

    lhs = B.mul(B.mul(t, "a", "b"), "a", "c")
    rhs = H.expand(t, [H.Phi("X1", "X2", "X3")], lambda t, z: _act_each(M, t, z, ("a", "b", "c")))
    rhs = B.mul(B.mul(rhs, "b", "c"), "a", "b")
    report.check("quasi-associative", "(ab)c = Σ(X¹·a)[(X²·b)(X³·c)]", lhs, rhs)

    a = M.vector("i", "a")
    report.check("unit-left", "1_B a = a", B.mul(kron(B.one("u"), a), "u", "a", out="a"), a)
    report.check("unit-right", "a 1_B = a", B.mul(kron(a, B.one("u")), "a", "u"), a)

    pair = kron(M.vector("i", "a"), M.vector("j", "b"), _h_universal(H))
    rhs = B.mul(M.act(M.act(pair, "a1", "a"), "a2", "b"), "a", "b")
    h = H.universal("h", "x")
    lhs = M.act(B.mul(kron(M.vector("i", "a"), M.vector("j", "b"), h), "a", "b"), "x", "a")
    report.check("module-algebra", "h·(ab) = Σ(h₁·a)(h₂·b)", lhs, rhs)
    lhs = M.act(kron(B.one("a"), h), "x", "a")
    report.check("module-unit", "h·1_B = ε(h)1_B", lhs, kron(H.counit_of("h"), B.one("a")))

    pair = kron(M.vector("i", "a"), M.vector("j", "b"))
    lhs = M.coact(B.mul(pair, "a", "b"), "a", "c")
    rhs = B.mul(coact_pair(M, M, pair, "a", "b", "c"), "a", "b")
    report.check(
        "comodule-algebra",
        "λ(bb') = ΣX¹(x¹Y¹·b)₍₋₁₎x²(Y²·b')₍₋₁₎Y³ ⊗ [X²·(x¹Y¹·b)₍₀₎][X³x³·(Y²·b')₍₀₎]",
        lhs,
        rhs,
    )
    report.check("comodule-unit", "λ(1_B) = 1_H⊗1_B", M.coact(B.one("a"), "a", "c"), kron(H.one("c"), B.one("a")))
    logger.info(f"Braided algebra check of {B.name or 'algebra'}: {report.summary()}")
    return report


def check_braided_coalgebra(C: BraidedCoalgebra) -> VerificationReport:
    """
    Verify that ``C`` is a coalgebra in ``^H_H YD``.

    Entries: the YD axioms of the carrier, ``quasi-coassociative``, ``counit-left``,
    ``counit-right``, ``module-coalgebra``, ``module-counit``, ``comodule-coalgebra`` and
    ``comodule-counit``.
    """
    H, M = C.H, C.carrier
    report = VerificationReport("braided-coalgebra").extend(check_yd(M))
    v = M.vector("i", "b")

    t = C.delta(C.delta(v, "b", "b", "3"), "b", "1", "2")
    lhs = H.expand(t, [H.Phi("X1", "X2", "X3")], lambda t, z: _act_each(M, t, z, ("1", "2", "3")))
    rhs = C.delta(C.delta(v, "b", "1", "b"), "b", "2", "3")
    report.check("quasi-coassociative", "ΣX¹·b₁₁⊗X²·b₁₂⊗X³·b₂ = Σb₁⊗b₂₁⊗b₂₂", lhs, rhs)
    report.check("counit-left", "Σε̲(b₁)b₂ = b", C.eps(C.delta(v, "b", "x", "b"), "x"), v)
    report.check("counit-right", "Σb₁ε̲(b₂) = b", C.eps(C.delta(v, "b", "b", "x"), "x"), v)

    t = kron(v, _h_universal(H))
    lhs = H.eps(C.delta(M.act(t, "a1", "b"), "b", "1", "2"), "a2")
    rhs = M.act(M.act(C.delta(t, "b", "1", "2"), "a1", "1"), "a2", "2")
    report.check("module-coalgebra", "Δ̲(h·b) = Σh₁·b₁⊗h₂·b₂", lhs, rhs)
    t = kron(v, H.universal("h", "x"))
    lhs = C.eps(M.act(t, "x", "b"), "b")
    report.check("module-counit", "ε̲(h·b) = ε(h)ε̲(b)", lhs, kron(H.counit_of("h"), element(C.counit, "i")))

    lhs = C.delta(M.coact(v, "b", "c"), "b", "1", "2")
    rhs = coact_pair(M, M, C.delta(v, "b", "1", "2"), "1", "2", "c")
    report.check(
        "comodule-coalgebra",
        "Σb₍₋₁₎⊗Δ̲(b₍₀₎) = ΣX¹(x¹Y¹·b₁)₍₋₁₎x²(Y²·b₂)₍₋₁₎Y³ ⊗ X²·(x¹Y¹·b₁)₍₀₎ ⊗ X³x³·(Y²·b₂)₍₀₎",
        lhs,
        rhs,
    )
    lhs = C.eps(M.coact(v, "b", "c"), "b")
    report.check("comodule-counit", "Σε̲(b₍₀₎)b₍₋₁₎ = ε̲(b)1", lhs, kron(element(C.counit, "i"), H.el(H.unit, "c")))
    logger.info(f"Braided coalgebra check of {C.name or 'coalgebra'}: {report.summary()}")
    return report


# -- bialgebras and Hopf algebras -------------------------------------------------------------


def closed_hopf_action(
    B: BraidedHopfAlgebra,
    t: Tensor,
    first: YDModule,
    omega: Callable[[Tensor, str, str], Tensor],
    m: str,
    c: str,
    b: str,
) -> Tensor:
    """
    The right ``B``-action on ``M⊗B`` in closed form, applied to legs ``m`` (in ``M``),
    ``c`` (in ``B``) and ``b`` (the acting element):

    ``Σ(y¹X¹·m)⋅[y²Y¹(x¹X²·c)₍₋₁₎x²X³₁·b₁] ⊗ [y³₁Y²·(x¹X²·c)₍₀₎][y³₂Y³x³X³₂·b₂]``

    ``omega(t, m_leg, b_leg)`` is the right action of ``B`` on ``M``, leaving its result on ``m_leg``.
    The result sits on legs ``m`` and ``c``.
    """
    H, Bc = B.H, B.carrier
    y, X, x, Y = ([fresh(p) for _ in range(3)] for p in ("y", "X", "x", "Y"))
    k, b1, b2 = fresh("k"), fresh("b"), fresh("b")
    X31, X32, y31, y32 = fresh("X"), fresh("X"), fresh("y"), fresh("y")
    constants = [
        H.delta(H.Phi_inv(*y), y[2], y31, y32),
        H.delta(H.Phi(*X), X[2], X31, X32),
        H.Phi_inv(*x),
        H.Phi(*Y),
    ]

    def term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = first.act_by(t, [z[y[0]], z[X[0]]], m)
        t = Bc.act_by(t, [z[x[0]], z[X[1]]], c)
        t = Bc.coact(t, c, k)
        t = Bc.act_by(t, [z[y[1]], z[Y[0]], k, z[x[1]], z[X31]], b1)
        t = omega(t, m, b1)
        t = Bc.act_by(t, [z[y31], z[Y[1]]], c)
        t = Bc.act_by(t, [z[y32], z[Y[2]], z[x[2]], z[X32]], b2)
        return B.mul(t, c, b2)

    return H.expand(B.delta(t, b, b1, b2), constants, term)


def hopf_action_map(B: BraidedHopfAlgebra, M: Module, omega: LinearMap) -> LinearMap:
    """
    The right ``B``-action on ``M⊗B`` composed from category maps:
    ``(ω⊗m̲)∘a⁻¹∘(id⊗a)∘(id⊗(c⊗id))∘(id⊗a⁻¹)∘a∘(id⊗Δ̲)``, inputs ``(M, B, B)``, outputs ``(M, B)``.
    """
    cat = ModuleCategory(B.H)
    Bm = B.carrier.module
    I_M, I_B = LinearMap.identity((M.dim,)), LinearMap.identity((B.dim,))
    c, _ = yd_braiding(B.carrier, B.carrier, validate=False)
    steps = [
        I_M.tensor(I_B).tensor(B.comult_map),
        cat.associator(M, Bm, (Bm, Bm)),
        I_M.tensor(cat.associator_inv(Bm, Bm, Bm)),
        I_M.tensor(c.tensor(I_B)),
        I_M.tensor(cat.associator(Bm, Bm, Bm)),
        cat.associator_inv(M, Bm, (Bm, Bm)),
        omega.tensor(B.mult_map),
    ]
    return reduce(lambda f, g: g @ f, steps)


def check_braided_bialgebra(B: BraidedHopfAlgebra) -> VerificationReport:
    """
    Verify that ``B`` is a bialgebra in ``^H_H YD``.

    Besides the algebra and coalgebra entries, multiplicativity of ``Δ̲`` is checked twice:
    in closed form (``comult-multiplicative``) and through the multiplication of ``B⊗B``
    composed from ``a`` and ``c`` (``comult-multiplicative-categorical``). The two right-hand
    sides must agree on their own (``comult-routes-agree``).
    """
    report = VerificationReport("braided-bialgebra")
    report.extend(check_braided_algebra(B.algebra)).extend(check_braided_coalgebra(B.coalgebra))
    M = B.carrier

    report.check("comult-unit", "Δ̲(1_B) = 1_B⊗1_B", B.delta(B.one("b"), "b", "1", "2"), kron(B.one("1"), B.one("2")))
    one = B.eps(B.one("b"), "b").item()
    report.record("counit-unit", "ε̲(1_B) = 1", one == 1)
    pair = kron(M.vector("i", "a"), M.vector("j", "b"))
    lhs = B.eps(B.mul(pair, "a", "b"), "a")
    report.check("counit-multiplicative", "ε̲(bb') = ε̲(b)ε̲(b')", lhs, kron(B.counit_of("i"), B.counit_of("j")))

    lhs = B.delta(B.mul(pair, "a", "b"), "a", "1", "2")
    t = B.delta(pair, "a", "1", "2")
    closed = closed_hopf_action(B, t, M, B.mul, "1", "2", "b")
    report.check(
        "comult-multiplicative",
        "Δ̲(bb') = Σ[y¹X¹·b₁][y²Y¹(x¹X²·b₂)₍₋₁₎x²X³₁·b'₁] ⊗ [y³₁Y²·(x¹X²·b₂)₍₀₎][y³₂Y³x³X³₂·b'₂]",
        lhs,
        closed,
    )
    I_B = LinearMap.identity((B.dim,))
    categorical = hopf_action_map(B, M.module, B.mult_map) @ B.comult_map.tensor(I_B)
    delta_m = B.comult_map @ B.mult_map
    report.check("comult-multiplicative-categorical", "Δ̲∘m̲ = m̲_{B⊗B}∘(Δ̲⊗Δ̲)", delta_m, categorical)
    closed_map = LinearMap.from_tensor(closed, ("i", "j"), ("1", "2"))
    report.check("comult-routes-agree", "closed form of m̲_{B⊗B} = composite of a, c, m̲", closed_map, categorical)
    logger.info(f"Braided bialgebra check of {B.name or 'bialgebra'}: {report.summary()}")
    return report


def check_braided_hopf(B: BraidedHopfAlgebra) -> VerificationReport:
    """
    The bialgebra entries plus the antipode axioms and the derived antipode properties
    (``antipode-linear``, ``antipode-colinear``, ``antipode-antimultiplicative``,
    ``antipode-anticomultiplicative``).
    """
    report = VerificationReport("braided-hopf").extend(check_braided_bialgebra(B))
    H, M = B.H, B.carrier
    v = M.vector("i", "b")
    rhs = kron(B.counit_of("i"), B.one("1"))
    lhs = B.mul(B.S(B.delta(v, "b", "1", "2"), "1"), "1", "2")
    report.check("antipode-left", "ΣS̲(b₁)b₂ = ε̲(b)1_B", lhs, rhs)
    lhs = B.mul(B.S(B.delta(v, "b", "1", "2"), "2"), "1", "2")
    report.check("antipode-right", "Σb₁S̲(b₂) = ε̲(b)1_B", lhs, rhs)

    t = kron(v, H.universal("h", "x"))
    report.check("antipode-linear", "S̲(h·b) = h·S̲(b)", B.S(M.act(t, "x", "b"), "b"), M.act(B.S(t, "b"), "x", "b"))
    lhs = M.coact(B.S(v, "b"), "b", "c")
    rhs = B.S(M.coact(v, "b", "c"), "b")
    report.check("antipode-colinear", "ΣS̲(b)₍₋₁₎⊗S̲(b)₍₀₎ = Σb₍₋₁₎⊗S̲(b₍₀₎)", lhs, rhs)

    pair = kron(M.vector("i", "x"), M.vector("j", "y"))
    lhs = B.S(B.mul(pair, "x", "y"), "x")
    t = B.S(M.coact(pair, "x", "k"), "y")
    rhs = B.mul(B.S(M.act(t, "k", "y"), "x"), "y", "x", out="x")
    report.check("antipode-antimultiplicative", "S̲(bb') = Σ[b₍₋₁₎·S̲(b')]S̲(b₍₀₎)", lhs, rhs)
    lhs = B.delta(B.S(v, "b"), "b", "1", "2")
    t = M.coact(B.delta(v, "b", "1", "2"), "1", "k")
    rhs = H.swap(B.S(M.act(B.S(t, "2"), "k", "2"), "1"), "1", "2")
    report.check("antipode-anticomultiplicative", "Δ̲(S̲(b)) = Σb₁₍₋₁₎·S̲(b₂)⊗S̲(b₁₍₀₎)", lhs, rhs)
    logger.info(f"Braided Hopf check of {B.name or 'Hopf algebra'}: {report.summary()}")
    return report


def is_braided_hopf(B: BraidedHopfAlgebra) -> bool:
    return check_braided_hopf(B).passed


# -- duals ------------------------------------------------------------------------------------


def _dual_structure(B: BraidedHopfAlgebra) -> tuple[np.ndarray, np.ndarray]:
    H = B.H
    tw = derive_twist(H, validate=False)
    pq = derive_pq(H, validate=False)

    # (φ*ψ)(b) = ⟨φ, f²q̃²₂Y³S⁻¹(q̃¹Y¹(p¹·b₂)₍₋₁₎p²)·b₁⟩⟨ψ, f¹q̃²₁Y²·(p¹·b₂)₍₀₎⟩
    constants = [
        pq.p_R.relabel({"1": "p1", "2": "p2"}),
        H.delta(pq.q_L.relabel({"1": "q1", "2": "q2"}), "q2", "q21", "q22"),
        tw.f.relabel({"1": "f1", "2": "f2"}),
        H.Phi("Y1", "Y2", "Y3"),
    ]

    def product(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = B.coact(B.carrier.act_by(t, [z["p1"]], "b2"), "b2", "k")
        t = H.S_inv(H.word(t, [z["q1"], z["Y1"], "k", z["p2"]], "s"), "s")
        t = B.carrier.act_by(t, [z["f2"], z["q22"], z["Y3"], "s"], "b1")
        return B.carrier.act_by(t, [z["f1"], z["q21"], z["Y2"]], "b2")

    t = H.expand(B.delta(B.vector("b", "x"), "x", "b1", "b2"), constants, product)
    mult = t.order(("b1", "b2", "b")).data

    # Δ̲*(φ) = Σ_{i,j} ⟨φ, [(g¹·b_j)₍₋₁₎g²·b_i](g¹·b_j)₍₀₎⟩ bⁱ⊗bʲ
    def coproduct(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = B.coact(B.carrier.act_by(t, [z["g1"]], "w"), "w", "k")
        return B.carrier.act_by(t, ["k", z["g2"]], "u")

    t = kron(B.vector("i", "u"), B.vector("j", "w"))
    t = H.expand(t, [tw.f_inv.relabel({"1": "g1", "2": "g2"})], coproduct)
    comult = B.mul(t, "u", "w").order(("u", "i", "j")).data
    return mult, comult


def dual_braided_hopf(B: BraidedHopfAlgebra, validate: bool = True) -> BraidedHopfAlgebra:
    """
    The braided Hopf algebra ``B*`` on the dual YD module, on the coordinate dual basis.

    Multiplication ``(φ*ψ)(b) = Σ⟨φ, f²q̃²₂Y³S⁻¹(q̃¹Y¹(p¹·b₂)₍₋₁₎p²)·b₁⟩⟨ψ, f¹q̃²₁Y²·(p¹·b₂)₍₀₎⟩``
    with ``q_L = q̃¹⊗q̃²`` and ``p_R = p¹⊗p²``, unit ``ε̲``, comultiplication
    ``Δ̲(φ) = Σ⟨φ, [(g¹·b_j)₍₋₁₎g²·b_i](g¹·b_j)₍₀₎⟩ bⁱ⊗bʲ``, counit ``φ ↦ φ(1_B)`` and
    antipode ``S̲*``.

    Raises:
        PostCheckError: If ``validate`` and ``B*`` fails :func:`check_braided_hopf`
    """
    if B.antipode is None:
        raise PreconditionError("the dual is built for braided Hopf algebras")
    D = dual_left_yd(B.carrier, validate=validate)
    mult, comult = _dual_structure(B)
    name = f"{B.name}*" if B.name else ""
    dual = BraidedHopfAlgebra(
        BraidedAlgebra(D, mult, B.coalgebra.counit, name=name),
        BraidedCoalgebra(D, comult, B.algebra.unit, name=name),
        np.transpose(B.antipode),
        name=name,
    )
    if validate:
        report = check_braided_hopf(dual)
        if not report.passed:
            raise PostCheckError(f"dual of {B.name or 'braided Hopf algebra'} fails its checks", report)
    return dual


def braided_from_structure(
    base: QuasiHopfAlgebra,
    action: np.ndarray,
    coaction: np.ndarray,
    mult: np.ndarray,
    unit: np.ndarray,
    comult: np.ndarray,
    counit: np.ndarray,
    antipode: np.ndarray | None = None,
    name: str = "",
) -> BraidedHopfAlgebra:
    """Assemble a braided bialgebra (Hopf algebra with ``antipode``) from raw structure constants."""
    carrier = YDModule(base, action, coaction, "left", name=name)
    return BraidedHopfAlgebra(
        BraidedAlgebra(carrier, mult, unit, name=name),
        BraidedCoalgebra(carrier, comult, counit, name=name),
        antipode,
        name=name,
    )


def identity_antipode(B: BraidedHopfAlgebra) -> BraidedHopfAlgebra:
    """``B`` with its antipode replaced by the identity map."""
    return BraidedHopfAlgebra(B.algebra, B.coalgebra, identity_matrix(B.dim), name=f"{B.name}[S=id]")
