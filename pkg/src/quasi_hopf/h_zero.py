"""
The braided algebra ``H₀``: ``H`` with the deformed product ``∘``, the adjoint action and its coaction.

With a quasitriangular structure ``H₀`` becomes a braided Hopf algebra in ``^H_H YD``; its
dual and integrals are built here in closed form and compared with the generic constructions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .algebra import Factor, QuasiHopfAlgebra
from .braided import (
    BraidedAlgebra,
    BraidedCoalgebra,
    BraidedHopfAlgebra,
    check_braided_algebra,
    check_braided_hopf,
    dual_braided_hopf,
)
from .category import Module
from .derived import check_lemma_identities, derive_pq, derive_twist
from .exceptions import PostCheckError
from .hopf_modules import integrals
from .quasitriangular import QTStructure, induced_yd
from .report import VerificationReport
from .tensor import LinearMap, Tensor, contract, element, kron
from .yetter_drinfeld import YDModule, dual_left_yd, yd_braiding

logger = logging.getLogger(__name__)


def _adjoint_action(A: QuasiHopfAlgebra) -> np.ndarray:
    # h▷h' = Σh₁h'S(h₂)
    t = A.delta(A.universal("h", "a"), "a", "a1", "a2")
    t = A.S(kron(t, A.universal("m", "x")), "a2")
    return A.word(t, ["a1", "x", "a2"], "n").order(("h", "m", "n")).data


def _s2_coaction(A: QuasiHopfAlgebra) -> np.ndarray:
    # λ(h) = ΣX¹Y¹₁h₁g¹S(q²Y²₂)Y³ ⊗ X²Y¹₂h₂g²S(X³q¹Y²₁)
    g = derive_twist(A, validate=False).f_inv.relabel({"1": "g1", "2": "g2"})
    q = derive_pq(A, validate=False).q_R.relabel({"1": "q1", "2": "q2"})
    Y = A.delta(A.delta(A.Phi("Y1", "Y2", "Y3"), "Y1", "Y11", "Y12"), "Y2", "Y21", "Y22")

    def term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.S(A.word(t, [z["q2"], z["Y22"]], "s"), "s")
        t = A.word(t, [z["X1"], z["Y11"], "x1", z["g1"], "s", z["Y3"]], "c")
        t = A.S(A.word(t, [z["X3"], z["q1"], z["Y21"]], "s"), "s")
        return A.word(t, [z["X2"], z["Y12"], "x2", z["g2"], "s"], "n")

    t = A.delta(A.universal("m", "x"), "x", "x1", "x2")
    t = A.expand(t, [A.Phi("X1", "X2", "X3"), Y, g, q], term)
    return t.order(("m", "c", "n")).data


def _circ(A: QuasiHopfAlgebra) -> np.ndarray:
    # h∘h' = ΣX¹hS(x¹X²)αx²X³₁h'S(x³X³₂)
    def term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.S(A.word(t, [z["x1"], z["X2"]], "s"), "s")
        t = A.S(A.word(t, [z["x3"], z["X32"]], "r"), "r")
        return A.word(t, [z["X1"], "h", "s", A.alpha, z["x2"], z["X31"], "k", "r"], "o")

    X = A.delta(A.Phi("X1", "X2", "X3"), "X3", "X31", "X32")
    t = A.expand(kron(A.universal("i", "h"), A.universal("j", "k")), [X, A.Phi_inv("x1", "x2", "x3")], term)
    return t.order(("i", "j", "o")).data


def h0_module(A: QuasiHopfAlgebra) -> Module:
    """``H`` as a left module over itself through ``h▷h' = Σh₁h'S(h₂)``."""
    return Module(_adjoint_action(A), name=f"H0({A.name})" if A.name else "H0")


def build_h0(A: QuasiHopfAlgebra, validate: bool = True) -> BraidedAlgebra:
    """
    ``H₀``: multiplication ``∘``, unit ``β``, action ``▷`` and the coaction
    ``λ(h) = ΣX¹Y¹₁h₁g¹S(q²Y²₂)Y³ ⊗ X²Y¹₂h₂g²S(X³q¹Y²₁)``.

    Raises:
        PostCheckError: If ``validate`` and ``H₀`` fails :func:`check_braided_algebra`
    """
    module = h0_module(A)
    carrier = YDModule(A, module.action, _s2_coaction(A), "left", name=module.name)
    B = BraidedAlgebra(carrier, _circ(A), A.beta, name=module.name)
    if validate:
        report = check_braided_algebra(B)
        if not report.passed:
            raise PostCheckError(f"{B.name} is not an algebra in the YD category", report)
    return B


def check_quantum_commutative(B: BraidedAlgebra) -> VerificationReport:
    """
    ``ab = Σ(a₍₋₁₎·b)a₍₀₎``, elementwise and as ``m∘c = m`` with the YD braiding.

    Entries: ``quantum-commutative``, ``quantum-commutative-braiding`` and
    ``quantum-commutative-routes-agree``.
    """
    M = B.carrier
    t = kron(M.vector("i", "a"), M.vector("j", "b"))
    lhs = B.mul(t, "a", "b")
    moved = M.act(M.coact(t, "a", "k"), "k", "b")
    rhs = B.mul(moved, "b", "a", out="a")
    report = VerificationReport("quantum-commutative")
    report.check("quantum-commutative", "h∘h' = Σ(h₍₋₁₎▷h')∘h₍₀₎", lhs, rhs)
    c, _ = yd_braiding(M, M, validate=False)
    braided = B.mult_map @ c
    report.check("quantum-commutative-braiding", "m∘c_{A,A} = m", braided, B.mult_map)
    elementwise = LinearMap.from_tensor(rhs, ("i", "j"), ("a",))
    report.check("quantum-commutative-routes-agree", "Σ(h₍₋₁₎▷h')∘h₍₀₎ = m∘c(h⊗h')", elementwise, braided)
    return report


def check_h0(A: QuasiHopfAlgebra) -> VerificationReport:
    """The algebra axioms of ``H₀``, its quantum commutativity, and the identities its proof runs through."""
    B = build_h0(A, validate=False)
    report = VerificationReport("h0").extend(check_braided_algebra(B))
    report.extend(check_quantum_commutative(B)).extend(check_lemma_identities(A))
    logger.info(f"H0 check of {A.name or 'algebra'}: {report.summary()}")
    return report


# -- the quasitriangular case -----------------------------------------------------------------


def _und(QT: QTStructure, carrier: YDModule) -> np.ndarray:
    # Δ̲(h) = Σx¹X¹h₁g¹S(x²R²y³X³₂) ⊗ (x³R¹)▷(y¹X²h₂g²S(y²X³₁))
    A = QT.algebra
    g = derive_twist(A, validate=False).f_inv.relabel({"1": "g1", "2": "g2"})
    constants = [
        A.delta(A.Phi("X1", "X2", "X3"), "X3", "X31", "X32"),
        A.Phi_inv("x1", "x2", "x3"),
        A.Phi_inv("y1", "y2", "y3"),
        QT.el("r1", "r2"),
        g,
    ]

    def term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.S(A.word(t, [z["x2"], z["r2"], z["y3"], z["X32"]], "s"), "s")
        t = A.word(t, [z["x1"], z["X1"], "h1", z["g1"], "s"], "1")
        t = A.S(A.word(t, [z["y2"], z["X31"]], "s"), "s")
        t = A.word(t, [z["y1"], z["X2"], "h2", z["g2"], "s"], "2")
        return carrier.act_by(t, [z["x3"], z["r1"]], "2")

    t = A.expand(A.delta(A.universal("i", "h"), "h", "h1", "h2"), constants, term)
    return t.order(("i", "1", "2")).data


def _unant(QT: QTStructure) -> np.ndarray:
    # S̲(h) = ΣX¹R²p²S(q¹(X²R¹p¹▷h)S(q²)X³)
    A = QT.algebra
    pq = derive_pq(A, validate=False)
    adjoint = Tensor(("~a", "~m", "~n"), _adjoint_action(A))
    constants = [
        A.Phi("X1", "X2", "X3"),
        QT.el("r1", "r2"),
        pq.p_R.relabel({"1": "p1", "2": "p2"}),
        pq.q_R.relabel({"1": "q1", "2": "q2"}),
    ]

    def term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.word(t, [z["X2"], z["r1"], z["p1"]], "a")
        t = contract(t, adjoint, [("a", "~a"), ("h", "~m")]).relabel({"~n": "h"})
        t = A.S(A.word(t, [z["q2"]], "q"), "q")
        t = A.S(A.word(t, [z["q1"], "h", "q", z["X3"]], "s"), "s")
        return A.word(t, [z["X1"], z["r2"], z["p2"], "s"], "o")

    return A.expand(A.universal("i", "h"), constants, term).order(("i", "o")).data


def build_h0_hopf(QT: QTStructure, validate: bool = True) -> BraidedHopfAlgebra:
    """
    ``H₀`` as a braided Hopf algebra: coaction ``λ(h) = ΣR²⊗R¹▷h``, comultiplication
    ``Δ̲(h) = Σx¹X¹h₁g¹S(x²R²y³X³₂) ⊗ (x³R¹)▷(y¹X²h₂g²S(y²X³₁))``, counit ``ε`` and antipode
    ``S̲(h) = ΣX¹R²p²S(q¹(X²R¹p¹▷h)S(q²)X³)``.

    Raises:
        PostCheckError: If ``validate`` and the result fails :func:`check_braided_hopf`
    """
    A = QT.algebra
    carrier = induced_yd(QT, h0_module(A), validate=validate)
    name = f"H0({A.name}, {QT.name})" if QT.name else carrier.name
    B = BraidedHopfAlgebra(
        BraidedAlgebra(carrier, _circ(A), A.beta, name=name),
        BraidedCoalgebra(carrier, _und(QT, carrier), A.counit, name=name),
        _unant(QT),
        name=name,
    )
    if validate:
        report = check_braided_hopf(B)
        if not report.passed:
            raise PostCheckError(f"{name} is not a braided Hopf algebra", report)
    return B


@dataclass(frozen=True, eq=False)
class HZero:
    """``H₀`` of ``algebra``; ``hopf`` is set when a quasitriangular structure is given."""

    algebra: QuasiHopfAlgebra
    braided: BraidedAlgebra
    hopf: BraidedHopfAlgebra | None = None


def h_zero(A: QuasiHopfAlgebra, QT: QTStructure | None = None, validate: bool = True) -> HZero:
    hopf = build_h0_hopf(QT, validate=validate) if QT is not None else None
    return HZero(A, build_h0(A, validate=validate), hopf)


def h0_consistency(QT: QTStructure) -> VerificationReport:
    """Whether the ``H₀`` coaction of the quasi-Hopf construction equals the R-induced ``ΣR²⊗R¹▷h``."""
    A = QT.algebra
    s2 = Tensor(("m", "c", "n"), _s2_coaction(A))
    induced = Tensor(("m", "c", "n"), induced_yd(QT, h0_module(A), validate=False).coaction)
    report = VerificationReport("h0-consistency")
    report.finding("coaction-quasi-vs-induced", "ΣX¹Y¹₁h₁g¹S(q²Y²₂)Y³ ⊗ X²Y¹₂h₂g²S(X³q¹Y²₁) = ΣR²⊗R¹▷h", s2, induced)
    return report


# -- the dual and its integrals ---------------------------------------------------------------


def _dual_h0(QT: QTStructure, B: BraidedHopfAlgebra) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    A = QT.algebra
    f = derive_twist(A, validate=False).f.relabel({"1": "f1", "2": "f2"})
    g = derive_twist(A, validate=False).f_inv.relabel({"1": "g1", "2": "g2"})
    R_inv = QT.R_inv.relabel({"1": "r1", "2": "r2"})
    M = B.carrier

    # (φ*ψ)(h) = Σ⟨φ, f²R̄²▷h₁⟩⟨ψ, f¹R̄¹▷h₂⟩ with Δ̲(h) = h₁⊗h₂
    def product(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = M.act_by(t, [z["f2"], z["r2"]], "1")
        return M.act_by(t, [z["f1"], z["r1"]], "2")

    t = A.expand(B.delta(B.vector("c", "x"), "x", "1", "2"), [f, R_inv], product)
    mult = t.order(("1", "2", "c")).data

    # ⟨φ, f²▷(Y²R̄²X¹x¹₁h₁g¹S(Y³x³))⟩⟨ψ, (f¹Y¹R̄¹)▷(X²x¹₂h₂g²S(X³x²))⟩
    def expanded_product(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.S(A.word(t, [z["Y3"], z["x3"]], "s"), "s")
        t = A.word(t, [z["Y2"], z["r2"], z["X1"], z["x11"], "h1", z["g1"], "s"], "1")
        t = M.act_by(t, [z["f2"]], "1")
        t = A.S(A.word(t, [z["X3"], z["x2"]], "s"), "s")
        t = A.word(t, [z["X2"], z["x12"], "h2", z["g2"], "s"], "2")
        return M.act_by(t, [z["f1"], z["Y1"], z["r1"]], "2")

    constants = [
        f,
        g,
        R_inv,
        A.Phi("Y1", "Y2", "Y3"),
        A.Phi("X1", "X2", "X3"),
        A.delta(A.Phi_inv("x1", "x2", "x3"), "x1", "x11", "x12"),
    ]
    t = A.expand(A.delta(A.universal("c", "h"), "h", "h1", "h2"), constants, expanded_product)
    expanded = t.order(("1", "2", "c")).data

    # Δ̲(φ) = Σ⟨φ, (R²g²▷e_i)∘(R¹g¹▷e_j)⟩ eⁱ⊗eʲ
    def coproduct(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = M.act_by(t, [z["r2"], z["g2"]], "u")
        return M.act_by(t, [z["r1"], z["g1"]], "w")

    t = A.expand(kron(B.vector("i", "u"), B.vector("j", "w")), [QT.el("r1", "r2"), g], coproduct)
    comult = B.mul(t, "u", "w").order(("u", "i", "j")).data
    return mult, expanded, comult


def _integral_characterization(QT: QTStructure, B: BraidedHopfAlgebra, Lam: np.ndarray) -> Tensor:
    # ΣΛ(S(p̃²)f¹R̄¹▷h₂)S(p̃¹)f²R̄²▷h₁ as a tensor on legs c (h) and 1
    A = QT.algebra
    M = B.carrier
    constants = [
        derive_pq(A, validate=False).p_L.relabel({"1": "p1", "2": "p2"}),
        derive_twist(A, validate=False).f.relabel({"1": "f1", "2": "f2"}),
        QT.R_inv.relabel({"1": "r1", "2": "r2"}),
    ]

    def term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.S(A.word(t, [z["p2"]], "s2"), "s2")
        t = A.S(A.word(t, [z["p1"]], "s1"), "s1")
        t = M.act_by(t, ["s2", z["f1"], z["r1"]], "2")
        t = contract(t, element(Lam, "~l"), [("2", "~l")])
        return M.act_by(t, ["s1", z["f2"], z["r2"]], "1")

    return A.expand(B.delta(B.vector("c", "x"), "x", "1", "2"), constants, term)


@dataclass(frozen=True, eq=False)
class H0Dual:
    dual: BraidedHopfAlgebra
    integrals: list[np.ndarray]
    report: VerificationReport = field(repr=False)


def h0_dual_and_integrals(QT: QTStructure, validate: bool = True) -> H0Dual:
    """
    The closed-form dual ``H₀*`` and its left integrals.

    The closed forms are compared entrywise with :func:`~quasi_hopf.braided.dual_braided_hopf`
    of :func:`build_h0_hopf`. The integrals come from :func:`~quasi_hopf.hopf_modules.integrals`;
    the explicit characterization ``ΣΛ(S(p̃²)f¹R̄¹▷h₂)S(p̃¹)f²R̄²▷h₁ = Λ(h)β`` is evaluated on them
    and recorded as the finding ``integral-characterization``.

    Raises:
        PostCheckError: If ``validate`` and a comparison or the integral checks fail
    """
    A = QT.algebra
    B = build_h0_hopf(QT, validate=validate)
    D = dual_left_yd(B.carrier, validate=validate)
    mult, expanded, comult = _dual_h0(QT, B)
    explicit = BraidedHopfAlgebra(
        BraidedAlgebra(D, mult, A.counit, name=f"{B.name}*"),
        BraidedCoalgebra(D, comult, A.beta, name=f"{B.name}*"),
        np.transpose(B.antipode),
        name=f"{B.name}*",
    )
    generic = dual_braided_hopf(B, validate=False)

    report = VerificationReport("h0-dual")
    report.check("dual-mult", "(φ*ψ)(h) = Σ⟨φ, f²R̄²▷h₁⟩⟨ψ, f¹R̄¹▷h₂⟩", explicit.mult_map, generic.mult_map)
    anchor = "Σ⟨φ, f²▷(Y²R̄²X¹x¹₁h₁g¹S(Y³x³))⟩⟨ψ, (f¹Y¹R̄¹)▷(X²x¹₂h₂g²S(X³x²))⟩ = (φ*ψ)(h)"
    report.check("dual-mult-expanded", anchor, LinearMap(expanded, 2), explicit.mult_map)
    report.check("dual-unit", "1_{H₀*} = ε", element(explicit.algebra.unit, "u"), element(generic.algebra.unit, "u"))
    report.check("dual-comult", "Δ̲(φ) = Σ⟨φ, (R²g²▷e_i)∘(R¹g¹▷e_j)⟩eⁱ⊗eʲ", explicit.comult_map, generic.comult_map)
    counits = element(explicit.coalgebra.counit, "u"), element(generic.coalgebra.counit, "u")
    report.check("dual-counit", "ε̲(φ) = φ(β)", *counits)
    report.check("dual-antipode", "S̲(φ) = φ∘S̲", explicit.antipode_map, generic.antipode_map)

    space = integrals(B, validate=False)
    report.extend(space.report)
    for Lam in space.basis:
        lhs = _integral_characterization(QT, B, Lam)
        rhs = kron(element(Lam, "c"), A.el(A.beta, "1"))
        report.finding("integral-characterization", "ΣΛ(S(p̃²)f¹R̄¹▷h₂)S(p̃¹)f²R̄²▷h₁ = Λ(h)β", lhs, rhs)
    logger.info(f"H0 dual of {B.name}: {report.summary()}")
    if validate and not report.passed:
        raise PostCheckError(f"closed-form dual of {B.name} disagrees with the generic dual", report)
    return H0Dual(explicit, space.basis, report)
