"""
Yetter-Drinfeld modules over a quasi-Hopf algebra in the three flavors.

Storage is the same for every flavor:

* ``action[h, m, n]``: coefficient of ``v_n`` in ``e_h·v_m`` (left action) or in ``v_m·e_h``
  (right action, right-left flavor)
* ``coaction[m, h, n]``: coefficient of ``e_h⊗v_n`` in ``λ(v_m)`` (left coaction) or of
  ``v_n⊗e_h`` in ``ρ(v_m)`` (right coaction, left-right flavor)

so converting between flavors only swaps the algebra for its ``op``/``cop`` variant.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .algebra import Factor, QuasiHopfAlgebra, fresh
from .category import Module, ModuleCategory
from .derived import cop, derive_twist, op, opcop
from .exceptions import PostCheckError, PreconditionError, ShapeError
from .linalg import inverse_map
from .report import VerificationReport
from .tensor import LinearMap, Tensor, as_exact, contract, identity, kron, map_equal

logger = logging.getLogger(__name__)

Flavor = Literal["left", "left-right", "right-left"]
FLAVORS: tuple[Flavor, ...] = ("left", "left-right", "right-left")


@dataclass(frozen=True, eq=False)
class YDModule:
    """A finite-dimensional Yetter-Drinfeld module; see the module docstring for the layout."""

    algebra: QuasiHopfAlgebra
    action: np.ndarray
    coaction: np.ndarray
    flavor: Flavor = "left"
    name: str = field(default="", kw_only=True)

    def __post_init__(self) -> None:
        if self.flavor not in FLAVORS:
            raise PreconditionError(f"unknown flavor '{self.flavor}', expected one of {FLAVORS}")
        action, coaction = as_exact(self.action), as_exact(self.coaction)
        d = self.algebra.dim
        if action.ndim != 3 or action.shape[0] != d or action.shape[1] != action.shape[2]:
            raise ShapeError(f"action has shape {action.shape}, expected ({d}, n, n)")
        n = action.shape[1]
        if coaction.shape != (n, d, n):
            raise ShapeError(f"coaction has shape {coaction.shape}, expected {(n, d, n)}")
        for name, array in (("action", action), ("coaction", coaction)):
            array.flags.writeable = False
            object.__setattr__(self, name, array)

    @property
    def dim(self) -> int:
        return int(self.action.shape[1])

    @property
    def module(self) -> Module:
        """The action as a left module (over ``H^op`` for the right-left flavor)."""
        return Module(self.action, name=self.name)

    def vector(self, m_in: str, leg: str) -> Tensor:
        """Universal basis vector ``v_m`` on ``leg``, quantified over the input leg ``m_in``."""
        return identity(m_in, leg, self.dim)

    def act(self, t: Tensor, h_leg: str, m_leg: str) -> Tensor:
        """Let the element on ``h_leg`` act on the vector on ``m_leg`` (from the flavor's side)."""
        a = Tensor(("~a", "~m", "~n"), self.action)
        return contract(t, a, [(h_leg, "~a"), (m_leg, "~m")]).relabel({"~n": m_leg})

    def act_by(self, t: Tensor, factors: Sequence[Factor], m_leg: str) -> Tensor:
        """Let the product of ``factors`` (legs of ``t`` or constant elements) act on ``m_leg``."""
        h = fresh("h")
        return self.act(self.algebra.word(t, factors, h), h, m_leg)

    def coact(self, t: Tensor, m_leg: str, h_out: str, m_out: str | None = None) -> Tensor:
        c = Tensor(("~m", "~c", "~n"), self.coaction)
        return contract(t, c, [(m_leg, "~m")]).relabel({"~c": h_out, "~n": m_out or m_leg})

    def with_algebra(self, algebra: QuasiHopfAlgebra, flavor: Flavor) -> YDModule:
        return YDModule(algebra, self.action, self.coaction, flavor, name=self.name)


def _check_module_axioms(report: VerificationReport, M: YDModule) -> None:
    A = M.algebra
    v = M.vector("m", "v")
    t = kron(v, A.universal("a", "x"), A.universal("b", "y"))
    if M.flavor == "right-left":
        lhs = M.act(A.mul(t, "x", "y"), "x", "v")
        rhs = M.act(M.act(t, "x", "v"), "y", "v")
        report.check("action-associative", "v·(ab) = (v·a)·b", lhs, rhs)
    else:
        lhs = M.act(A.mul(t, "x", "y"), "x", "v")
        rhs = M.act(M.act(t, "y", "v"), "x", "v")
        report.check("action-associative", "(ab)·v = a·(b·v)", lhs, rhs)
    report.check("action-unital", "1·v = v", M.act(kron(v, A.el(A.unit, "x")), "x", "v"), v)
    lhs = A.eps(M.coact(v, "v", "c"), "c")
    anchor = "Σε(m₍₁₎)m₍₀₎ = m" if M.flavor == "left-right" else "Σε(m₍₋₁₎)m₍₀₎ = m"
    report.check("coaction-counital", anchor, lhs, v)


def _left_identities(M: YDModule) -> tuple[tuple[Tensor, Tensor], tuple[Tensor, Tensor]]:
    A = M.algebra
    v = M.vector("m", "v")

    def lhs_term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = M.coact(M.act_by(t, [z["X2"]], "v"), "v", "d")
        return A.word(A.word(t, [z["X1"], "c"], "1"), ["d", z["X3"]], "2")

    def rhs_term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.delta(M.coact(M.act_by(t, [z["Y1"]], "v"), "v", "c"), "c", "c1", "c2")
        t = A.word(t, [z["X1"], "c1", z["Y2"]], "1")
        t = A.word(t, [z["X2"], "c2", z["Y3"]], "2")
        return M.act_by(t, [z["X3"]], "v")

    lhs = A.expand(M.coact(v, "v", "c"), [A.Phi("X1", "X2", "X3")], lhs_term)
    rhs = A.expand(v, [A.Phi("Y1", "Y2", "Y3"), A.Phi("X1", "X2", "X3")], rhs_term)
    coassociative = (lhs, rhs)

    h = A.delta(A.universal("h", "a"), "a", "a1", "a2")
    t = M.coact(kron(v, h), "v", "c")
    lhs = M.act(A.word(t, ["a1", "c"], "1"), "a2", "v")
    t = M.coact(M.act(kron(v, h), "a1", "v"), "v", "c")
    compatible = (lhs, A.word(t, ["c", "a2"], "1"))
    return coassociative, compatible


def _left_right_identities(M: YDModule) -> tuple[tuple[Tensor, Tensor], tuple[Tensor, Tensor]]:
    A = M.algebra
    v = M.vector("m", "v")

    def lhs_term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = M.coact(M.act_by(t, [z["x2"]], "v"), "v", "d")
        return A.word(A.word(t, ["d", z["x1"]], "2"), [z["x3"], "c"], "3")

    def rhs_term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.delta(M.coact(M.act_by(t, [z["y3"]], "v"), "v", "c"), "c", "c1", "c2")
        t = M.act_by(t, [z["x1"]], "v")
        t = A.word(t, [z["x2"], "c1", z["y1"]], "2")
        return A.word(t, [z["x3"], "c2", z["y2"]], "3")

    lhs = A.expand(M.coact(v, "v", "c"), [A.Phi_inv("x1", "x2", "x3")], lhs_term)
    rhs = A.expand(v, [A.Phi_inv("y1", "y2", "y3"), A.Phi_inv("x1", "x2", "x3")], rhs_term)
    coassociative = (lhs, rhs)

    h = A.delta(A.universal("h", "a"), "a", "a1", "a2")
    t = M.coact(kron(v, h), "v", "c")
    lhs = A.word(M.act(t, "a1", "v"), ["a2", "c"], "2")
    t = M.coact(M.act(kron(v, h), "a2", "v"), "v", "c")
    compatible = (lhs, A.word(t, ["c", "a1"], "2"))
    return coassociative, compatible


def _right_left_identities(M: YDModule) -> tuple[tuple[Tensor, Tensor], tuple[Tensor, Tensor]]:
    A = M.algebra
    v = M.vector("m", "v")

    def lhs_term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = M.coact(M.act_by(t, [z["x2"]], "v"), "v", "d")
        return A.word(A.word(t, ["c", z["x1"]], "1"), [z["x3"], "d"], "2")

    def rhs_term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.delta(M.coact(M.act_by(t, [z["y1"]], "v"), "v", "c"), "c", "c1", "c2")
        t = A.word(t, [z["y2"], "c1", z["x1"]], "1")
        t = A.word(t, [z["y3"], "c2", z["x2"]], "2")
        return M.act_by(t, [z["x3"]], "v")

    lhs = A.expand(M.coact(v, "v", "c"), [A.Phi_inv("x1", "x2", "x3")], lhs_term)
    rhs = A.expand(v, [A.Phi_inv("y1", "y2", "y3"), A.Phi_inv("x1", "x2", "x3")], rhs_term)
    coassociative = (lhs, rhs)

    h = A.delta(A.universal("h", "a"), "a", "a1", "a2")
    t = M.coact(kron(v, h), "v", "c")
    lhs = M.act(A.word(t, ["c", "a1"], "1"), "a2", "v")
    t = M.coact(M.act(kron(v, h), "a1", "v"), "v", "c")
    compatible = (lhs, A.word(t, ["a2", "c"], "1"))
    return coassociative, compatible


_IDENTITIES = {
    "left": (
        _left_identities,
        "ΣX¹m₍₋₁₎⊗(X²·m₍₀₎)₍₋₁₎X³⊗(X²·m₍₀₎)₍₀₎ = ΣX¹(Y¹·m)₍₋₁₎₁Y²⊗X²(Y¹·m)₍₋₁₎₂Y³⊗X³·(Y¹·m)₍₀₎",
        "Σh₁m₍₋₁₎⊗h₂·m₍₀₎ = Σ(h₁·m)₍₋₁₎h₂⊗(h₁·m)₍₀₎",
    ),
    "left-right": (
        _left_right_identities,
        "Σ(x²·m₍₀₎)₍₀₎⊗(x²·m₍₀₎)₍₁₎x¹⊗x³m₍₁₎ = Σx¹·(y³·m)₍₀₎⊗x²(y³·m)₍₁₎₁y¹⊗x³(y³·m)₍₁₎₂y²",
        "Σh₁·m₍₀₎⊗h₂m₍₁₎ = Σ(h₂·m)₍₀₎⊗(h₂·m)₍₁₎h₁",
    ),
    "right-left": (
        _right_left_identities,
        "Σm₍₋₁₎x¹⊗x³(m₍₀₎·x²)₍₋₁₎⊗(m₍₀₎·x²)₍₀₎ = Σy²(m·y¹)₍₋₁₎₁x¹⊗y³(m·y¹)₍₋₁₎₂x²⊗(m·y¹)₍₀₎·x³",
        "Σm₍₋₁₎h₁⊗m₍₀₎·h₂ = Σh₂(m·h₁)₍₋₁₎⊗(m·h₁)₍₀₎",
    ),
}


def check_yd(M: YDModule) -> VerificationReport:
    """
    Verify the Yetter-Drinfeld axioms of ``M`` in its own flavor.

    Entries: ``action-associative``, ``action-unital``, ``coaction-counital``,
    ``yd-quasi-coassociative`` and ``yd-compatible``; the ids are shared by all flavors.
    """
    report = VerificationReport("yd")
    _check_module_axioms(report, M)
    identities, coassociative_anchor, compatible_anchor = _IDENTITIES[M.flavor]
    coassociative, compatible = identities(M)
    report.check("yd-quasi-coassociative", coassociative_anchor, *coassociative)
    report.check("yd-compatible", compatible_anchor, *compatible)
    logger.debug(f"YD check of {M.name or 'module'} ({M.flavor}): {report.summary()}")
    return report


def is_yd(M: YDModule) -> bool:
    return check_yd(M).passed


# -- flavor dictionaries ----------------------------------------------------------------------


def left_right_as_left_cop(M: YDModule) -> YDModule:
    """A left-right module over ``H`` read as a left module over ``H^cop`` (same tensors)."""
    if M.flavor != "left-right":
        raise PreconditionError(f"expected a left-right module, got {M.flavor}")
    return M.with_algebra(cop(M.algebra), "left")


def right_left_as_left_op(M: YDModule) -> YDModule:
    """A right-left module over ``H`` read as a left module over ``H^op`` (same tensors)."""
    if M.flavor != "right-left":
        raise PreconditionError(f"expected a right-left module, got {M.flavor}")
    return M.with_algebra(op(M.algebra), "left")


def as_left(M: YDModule) -> YDModule:
    if M.flavor == "left-right":
        return left_right_as_left_cop(M)
    if M.flavor == "right-left":
        return right_left_as_left_op(M)
    return M


# -- tensor products and braiding -------------------------------------------------------------


def _same_setting(M: YDModule, N: YDModule) -> None:
    if M.flavor != N.flavor:
        raise PreconditionError(f"flavor mismatch: {M.flavor} vs {N.flavor}")
    if M.algebra is not N.algebra and M.algebra.fingerprint != N.algebra.fingerprint:
        raise PreconditionError("modules live over different algebras")


def coact_pair(M: YDModule, N: YDModule, t: Tensor, m_leg: str, n_leg: str, h_out: str) -> Tensor:
    """
    Apply the coaction of ``M⊗N`` to the legs ``m_leg`` (in ``M``) and ``n_leg`` (in ``N``) of ``t``:
    ``λ(m⊗n) = ΣX¹(x¹Y¹·m)₍₋₁₎x²(Y²·n)₍₋₁₎Y³ ⊗ X²·(x¹Y¹·m)₍₀₎ ⊗ X³x³·(Y²·n)₍₀₎``.
    """
    A = M.algebra
    Y, x, X = ([fresh(p) for _ in range(3)] for p in ("Y", "x", "X"))
    c, d = fresh("c"), fresh("d")

    def term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = M.act_by(t, [z[x[0]], z[Y[0]]], m_leg)
        t = N.act_by(t, [z[Y[1]]], n_leg)
        t = N.coact(M.coact(t, m_leg, c), n_leg, d)
        t = A.word(t, [z[X[0]], c, z[x[1]], d, z[Y[2]]], h_out)
        t = M.act_by(t, [z[X[1]]], m_leg)
        return N.act_by(t, [z[X[2]], z[x[2]]], n_leg)

    return A.expand(t, [A.Phi(*Y), A.Phi_inv(*x), A.Phi(*X)], term)


def _left_tensor(M: YDModule, N: YDModule) -> YDModule:
    A = M.algebra
    action = ModuleCategory(A).tensor(M.module, N.module).action
    t = coact_pair(M, N, kron(M.vector("m", "v"), N.vector("n", "w")), "v", "w", "h")
    size = M.dim * N.dim
    coaction = t.order(("m", "n", "h", "v", "w")).data.reshape((size, A.dim, size))
    return YDModule(A, action, coaction, "left", name=f"{M.name or '?'}⊗{N.name or '?'}")


def yd_tensor(M: YDModule, N: YDModule, validate: bool = True) -> YDModule:
    """
    ``M⊗N`` with the diagonal action and the coaction
    ``λ(m⊗n) = ΣX¹(x¹Y¹·m)₍₋₁₎x²(Y²·n)₍₋₁₎Y³ ⊗ X²·(x¹Y¹·m)₍₀₎ ⊗ X³x³·(Y²·n)₍₀₎``.

    The basis of ``M⊗N`` is flattened row-major. Left-right and right-left modules are
    multiplied as left modules over ``H^cop`` and ``H^op``.

    Raises:
        PreconditionError: On a flavor or algebra mismatch
        PostCheckError: If ``validate`` and the product fails :func:`check_yd`
    """
    _same_setting(M, N)
    product = _left_tensor(as_left(M), as_left(N)).with_algebra(M.algebra, M.flavor)
    if validate:
        report = check_yd(product)
        if not report.passed:
            raise PostCheckError(f"tensor product {product.name} is not a YD module", report)
    return product


def _braiding(M: YDModule, N: YDModule) -> LinearMap:
    t = kron(M.vector("m", "v"), N.vector("n", "w"))
    t = N.act(M.coact(t, "v", "c"), "c", "w")
    return LinearMap.from_tensor(t, ("m", "n"), ("w", "v"))


def _braiding_inv(M: YDModule, N: YDModule) -> LinearMap:
    A = M.algebra
    y = A.delta(A.Phi_inv("y1", "y2", "y3"), "y3", "y31", "y32")

    def term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = M.coact(M.act_by(t, [z["x1"]], "v"), "v", "c")
        t = M.act_by(t, [z["y31"], z["X2"]], "v")
        t = A.S(A.word(t, [z["y32"], z["X3"], z["x3"]], "b"), "b")
        t = A.S(A.word(t, [z["y1"]], "s"), "s")
        t = A.word(t, ["s", A.alpha, z["y2"], z["X1"], "c", z["x2"], A.beta, "b"], "e")
        return N.act(A.S_inv(t, "e"), "e", "w")

    pair = kron(N.vector("n", "w"), M.vector("m", "v"))
    t = A.expand(pair, [A.Phi_inv("x1", "x2", "x3"), A.Phi("X1", "X2", "X3"), y], term)
    return LinearMap.from_tensor(t, ("n", "m"), ("v", "w"))


def check_yd_braiding(M: YDModule, N: YDModule) -> VerificationReport:
    """
    Post-checks of ``c_{M,N}(m⊗n) = Σm₍₋₁₎·n⊗m₍₀₎`` against its closed-form inverse.

    Entries: ``braiding-inverse-right``, ``braiding-inverse-left``, ``braiding-inverse-matrix``
    (closed form equals the matrix inverse) and the morphism entries of :func:`check_yd_morphism`.
    """
    _same_setting(M, N)
    if M.flavor != "left":
        raise PreconditionError("the braiding is defined on left YD modules")
    report = VerificationReport("yd-braiding")
    c, c_inv = _braiding(M, N), _braiding_inv(M, N)
    report.check("braiding-inverse-right", "c∘c⁻¹ = id_{N⊗M}", c @ c_inv, LinearMap.identity((N.dim, M.dim)))
    report.check("braiding-inverse-left", "c⁻¹∘c = id_{M⊗N}", c_inv @ c, LinearMap.identity((M.dim, N.dim)))
    inverted = inverse_map(c) if report.passed else None
    if inverted is not None:
        report.check("braiding-inverse-matrix", "closed-form c⁻¹ = matrix inverse of c", c_inv, inverted)
    flat = c.reshape((M.dim * N.dim,), (N.dim * M.dim,))
    morphism = check_yd_morphism(flat, yd_tensor(M, N, validate=False), yd_tensor(N, M, validate=False))
    report.extend(morphism)
    return report


def yd_braiding(M: YDModule, N: YDModule, validate: bool = True) -> tuple[LinearMap, LinearMap]:
    """
    The braiding ``c_{M,N}: M⊗N → N⊗M`` and its inverse ``N⊗M → M⊗N``.

    Raises:
        PostCheckError: If ``validate`` and a post-check of :func:`check_yd_braiding` fails
    """
    if validate:
        report = check_yd_braiding(M, N)
        if not report.passed:
            raise PostCheckError("braiding post-checks failed", report)
    return _braiding(M, N), _braiding_inv(M, N)


def check_yd_morphism(phi: LinearMap, M: YDModule, N: YDModule) -> VerificationReport:
    """Whether ``phi: M → N`` commutes with both actions and both coactions."""
    A = M.algebra
    f = phi.reshape((M.dim,), (N.dim,)).to_tensor(("~i",), ("~o",))

    def apply(t: Tensor) -> Tensor:
        return contract(t, f, [("v", "~i")]).relabel({"~o": "v"})

    report = VerificationReport("yd-morphism")
    t = kron(M.vector("m", "v"), A.universal("h", "a"))
    report.check("morphism-action", "φ(h·m) = h·φ(m)", apply(M.act(t, "a", "v")), N.act(apply(t), "a", "v"))
    v = M.vector("m", "v")
    report.check(
        "morphism-coaction",
        "(id⊗φ)∘λ_M = λ_N∘φ",
        apply(M.coact(v, "v", "c")),
        N.coact(apply(v), "v", "c"),
    )
    return report


def check_yd_hexagons(M: YDModule, N: YDModule, P: YDModule) -> VerificationReport:
    """Both hexagon identities of the YD braiding, and the associator as a YD morphism."""
    for X in (N, P):
        _same_setting(M, X)
    if M.flavor != "left":
        raise PreconditionError("the braiding is defined on left YD modules")
    report = VerificationReport("yd-hexagon")
    cat = ModuleCategory(M.algebra)
    dm, dn, dp = M.dim, N.dim, P.dim

    def a(X: YDModule, Y: YDModule, Z: YDModule) -> LinearMap:
        return cat.associator(X.module, Y.module, Z.module)

    def a_inv(X: YDModule, Y: YDModule, Z: YDModule) -> LinearMap:
        return cat.associator_inv(X.module, Y.module, Z.module)

    def identity_of(X: YDModule) -> LinearMap:
        return LinearMap.identity((X.dim,))

    NP = yd_tensor(N, P, validate=False)
    lhs = (
        a(N, P, M)
        @ _braiding(M, NP).reshape((dm, dn * dp), (dn, dp, dm))
        @ a(M, N, P).reshape((dm, dn, dp), (dm, dn * dp))
    )
    rhs = identity_of(N).tensor(_braiding(M, P)) @ a(N, M, P) @ _braiding(M, N).tensor(identity_of(P))
    report.check("hexagon-1", "a∘c_{M,N⊗P}∘a = (id⊗c)∘a∘(c⊗id)", lhs, rhs)

    MN = yd_tensor(M, N, validate=False)
    lhs = (
        a_inv(P, M, N)
        @ _braiding(MN, P).reshape((dm * dn, dp), (dp, dm, dn))
        @ a_inv(M, N, P).reshape((dm, dn, dp), (dm * dn, dp))
    )
    rhs = _braiding(M, P).tensor(identity_of(N)) @ a_inv(M, P, N) @ identity_of(M).tensor(_braiding(N, P))
    report.check("hexagon-2", "a⁻¹∘c_{M⊗N,P}∘a⁻¹ = (c⊗id)∘a⁻¹∘(id⊗c)", lhs, rhs)

    source = yd_tensor(MN, P, validate=False)
    target = yd_tensor(M, NP, validate=False)
    flat = a(M, N, P).reshape((dm * dn * dp,), (dm * dn * dp,))
    for entry in check_yd_morphism(flat, source, target).entries:
        report.record(f"associator-{entry.check_id}", entry.anchor, entry.passed, entry.witness)
    return report


def check_braiding_naturality(phi: LinearMap, M: YDModule, N: YDModule, P: YDModule) -> VerificationReport:
    """Naturality of ``c`` in both arguments along a YD morphism ``phi: M → N``."""
    report = VerificationReport("yd-naturality")
    phi = phi.reshape((M.dim,), (N.dim,))
    identity_p = LinearMap.identity((P.dim,))
    lhs = identity_p.tensor(phi) @ _braiding(M, P)
    rhs = _braiding(N, P) @ phi.tensor(identity_p)
    report.check("naturality-left", "(id⊗φ)∘c_{M,P} = c_{N,P}∘(φ⊗id)", lhs, rhs)
    lhs = phi.tensor(identity_p) @ _braiding(P, M)
    rhs = _braiding(P, N) @ identity_p.tensor(phi)
    report.check("naturality-right", "(φ⊗id)∘c_{P,M} = c_{P,N}∘(id⊗φ)", lhs, rhs)
    return report


# -- R_M and the quasi-Yang-Baxter equation ---------------------------------------------------


def rm_map(M: YDModule) -> LinearMap:
    """
    ``R_M`` on ``M⊗M``: ``m⊗n ↦ Σn₍₁₎·m⊗n₍₀₎`` (left-right) or ``m⊗n ↦ Σm·n₍₋₁₎⊗n₍₀₎`` (right-left).
    """
    if M.flavor == "left":
        raise PreconditionError("R_M is defined for left-right and right-left modules")
    t = kron(M.vector("m", "v"), M.vector("n", "w"))
    t = M.act(M.coact(t, "w", "c"), "c", "v")
    return LinearMap.from_tensor(t, ("m", "n"), ("v", "w"))


def on_factors(f: LinearMap, i: int, j: int, dim: int) -> LinearMap:
    """``f`` acting on factors ``i`` and ``j`` (1-based) of ``M⊗M⊗M``, identity on the third."""
    k = ({1, 2, 3} - {i, j}).pop()
    g = f.tensor(LinearMap.identity((dim,)))
    sigma = [0, 0, 0]
    sigma[i - 1], sigma[j - 1], sigma[k - 1] = 1, 2, 3
    return g.permute_inputs(sigma).permute_outputs(sigma)


def check_quasi_yang_baxter(M: YDModule) -> VerificationReport:
    """
    ``R₁₂Φ₃₁₂R₁₃Φ⁻¹₁₃₂R₂₃Φ = Φ₃₂₁R₂₃Φ⁻¹₂₃₁R₁₃Φ₂₁₃R₁₂`` on ``M⊗M⊗M``.

    The ``Φ`` factors act by left multiplication; for the right-left flavor the equation
    is taken over ``H^{op,cop}``, whose reassociator is ``Φ^{321}`` and whose left action
    is the right action of ``H``.
    """
    K = M.algebra if M.flavor == "left-right" else opcop(M.algebra)
    module = M.module
    cat = ModuleCategory(K)
    objects = (module, module, module)
    legs = ("1", "2", "3")

    def phi(a: str, b: str, c: str) -> LinearMap:
        return cat.action_of(K.Phi(a, b, c), legs, objects)

    def phi_inv(a: str, b: str, c: str) -> LinearMap:
        return cat.action_of(K.Phi_inv(a, b, c), legs, objects)

    R = rm_map(M)
    R12, R13, R23 = (on_factors(R, i, j, M.dim) for i, j in ((1, 2), (1, 3), (2, 3)))
    lhs = R12 @ phi("3", "1", "2") @ R13 @ phi_inv("1", "3", "2") @ R23 @ phi("1", "2", "3")
    rhs = phi("3", "2", "1") @ R23 @ phi_inv("2", "3", "1") @ R13 @ phi("2", "1", "3") @ R12
    report = VerificationReport("module-yang-baxter")
    report.check("module-yang-baxter", "R₁₂Φ₃₁₂R₁₃Φ⁻¹₁₃₂R₂₃Φ = Φ₃₂₁R₂₃Φ⁻¹₂₃₁R₁₃Φ₂₁₃R₁₂ on M⊗M⊗M", lhs, rhs)
    return report


# -- duals ------------------------------------------------------------------------------------


def _dual_yd(M: YDModule) -> YDModule:
    action = np.transpose(M.action, (0, 2, 1))
    coaction = np.transpose(M.coaction, (2, 1, 0))
    return YDModule(M.algebra, action, coaction, "left-right", name=f"{M.name}*")


def check_dual_yd(M: YDModule) -> VerificationReport:
    """The dual of a right-left module is left-right, and ``R_{M*}`` is the transpose of ``R_M``."""
    D = _dual_yd(M)
    report = VerificationReport("dual-yd")
    for entry in check_yd(D).entries:
        report.record(f"dual-{entry.check_id}", entry.anchor, entry.passed, entry.witness)
    report.check("dual-rm-transpose", "R_{M*} = (R_M)* under (M⊗M)* ≅ M*⊗M*", rm_map(D), rm_map(M).transpose())
    return report


def dual_yd(M: YDModule, validate: bool = True) -> YDModule:
    """
    Dual of a finite-dimensional right-left module.

    The action is ``(h·m*)(m) = m*(m·h)``; the right coaction is fixed by
    ``Σm*₍₀₎(m)m*₍₁₎ = Σm*(m₍₀₎)m₍₋₁₎``.

    Raises:
        PreconditionError: If ``M`` is not right-left
        PostCheckError: If ``validate`` and :func:`check_dual_yd` fails
    """
    if M.flavor != "right-left":
        raise PreconditionError(f"dual_yd expects a right-left module, got {M.flavor}")
    if validate:
        report = check_dual_yd(M)
        if not report.passed:
            raise PostCheckError(f"dual of {M.name or 'module'} failed its post-checks", report)
    return _dual_yd(M)


def dual_left_yd(M: YDModule, validate: bool = True) -> YDModule:
    """
    Dual of a finite-dimensional left module, with ``(h·m*)(m) = m*(S(h)·m)`` and
    ``λ(m*) = Σ_i ⟨m*, f²·(g¹·m_i)₍₀₎⟩ S⁻¹(f¹(g¹·m_i)₍₋₁₎g²) ⊗ m^i``.

    Raises:
        PreconditionError: If ``M`` is not a left module
        PostCheckError: If ``validate`` and the dual fails :func:`check_yd`
    """
    if M.flavor != "left":
        raise PreconditionError(f"dual_left_yd expects a left module, got {M.flavor}")
    A = M.algebra
    action = ModuleCategory(A).dual(M.module).action
    tw = derive_twist(A, validate=False)
    t = kron(M.vector("i", "v"), tw.f.relabel({"1": "f1", "2": "f2"}), tw.f_inv.relabel({"1": "g1", "2": "g2"}))
    t = M.coact(M.act(t, "g1", "v"), "v", "c")
    t = M.act(t, "f2", "v")
    t = A.S_inv(A.word(t, ["f1", "c", "g2"], "e"), "e")
    coaction = t.order(("v", "e", "i")).data
    D = YDModule(A, action, coaction, "left", name=f"{M.name}*")
    if validate:
        report = check_yd(D)
        if not report.passed:
            raise PostCheckError(f"left dual of {M.name or 'module'} is not a YD module", report)
    return D


def same_module(M: YDModule, N: YDModule) -> bool:
    """Literal equality of flavor, action and coaction."""
    return (
        M.flavor == N.flavor
        and M.action.shape == N.action.shape
        and M.coaction.shape == N.coaction.shape
        and map_equal(M.action, N.action).equal
        and map_equal(M.coaction, N.coaction).equal
    )
