"""
Canonical elements of a quasi-Hopf algebra and the constructions built from them.

* the Drinfeld twist ``f`` with ``γ``, ``δ`` and ``f⁻¹``
* the elements ``p_R``, ``q_R``, ``p_L``, ``q_L`` and ``U``
* gauge transformations (twisting) and the ``op``/``cop``/``opcop`` variants
"""

import logging
import threading
from collections import OrderedDict
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, TypeVar

import numpy as np

from .algebra import Factor, QuasiBialgebra, QuasiHopfAlgebra
from .axioms import check_quasi_bialgebra, check_quasi_hopf
from .exceptions import NotInvertibleError, PostCheckError, PreconditionError
from .report import VerificationReport
from .tensor import ONE, Tensor, constant, kron, map_equal

logger = logging.getLogger(__name__)

PAIR = ("1", "2")
TRIPLE = ("1", "2", "3")

T = TypeVar("T")

CACHE_SIZE = 64

_CACHE: OrderedDict[tuple[str, str], Any] = OrderedDict()
_CACHE_LOCK = threading.Lock()


def cached(A: QuasiBialgebra, key: str, compute: Callable[[], T]) -> T:
    """
    Least-recently-used cache keyed on the structure constants' content hash.

    At most ``CACHE_SIZE`` values are kept; the least recently used one is evicted first.
    """
    cache_key = (A.fingerprint, key)
    with _CACHE_LOCK:
        if cache_key in _CACHE:
            _CACHE.move_to_end(cache_key)
            return _CACHE[cache_key]
    value = compute()
    with _CACHE_LOCK:
        # a concurrent fill computed the same value
        value = _CACHE.setdefault(cache_key, value)
        _CACHE.move_to_end(cache_key)
        while len(_CACHE) > CACHE_SIZE:
            _CACHE.popitem(last=False)
        return value


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


@dataclass(frozen=True, eq=False)
class DrinfeldTwist:
    gamma: Tensor
    delta: Tensor
    f: Tensor
    f_inv: Tensor
    report: VerificationReport = field(repr=False)


@dataclass(frozen=True, eq=False)
class PQElements:
    p_R: Tensor
    q_R: Tensor
    p_L: Tensor
    q_L: Tensor
    report: VerificationReport = field(repr=False)


# -- Drinfeld twist ----------------------------------------------------------------------------


def _gamma(A: QuasiHopfAlgebra) -> Tensor:
    # A = (Φ⊗1)(Δ⊗id⊗id)(Φ⁻¹), γ = ΣS(A²)αA³ ⊗ S(A¹)αA⁴
    four = A.product(
        ("1", "2", "3", "4"),
        kron(A.Phi("1", "2", "3"), A.one("4")),
        A.delta(A.Phi_inv("x", "3", "4"), "x", "1", "2"),
    )
    four = A.S(four, "1", "2")
    t = A.word(four, ["2", A.alpha, "3"], "a")
    t = A.word(t, ["1", A.alpha, "4"], "b")
    return t.relabel(a="1", b="2").order(PAIR)


def _delta(A: QuasiHopfAlgebra) -> Tensor:
    # B = (Δ⊗id⊗id)(Φ)(Φ⁻¹⊗1), δ = ΣB¹βS(B⁴) ⊗ B²βS(B³)
    four = A.product(
        ("1", "2", "3", "4"),
        A.delta(A.Phi("x", "3", "4"), "x", "1", "2"),
        kron(A.Phi_inv("1", "2", "3"), A.one("4")),
    )
    four = A.S(four, "3", "4")
    t = A.word(four, ["1", A.beta, "4"], "a")
    t = A.word(t, ["2", A.beta, "3"], "b")
    return t.relabel(a="1", b="2").order(PAIR)


def _f(A: QuasiHopfAlgebra, gamma: Tensor) -> Tensor:
    # f = Σ(S⊗S)(Δ^op(x¹)) γ Δ(x²βS(x³))
    t = A.delta_op(A.Phi_inv("x1", "x2", "x3"), "x1", "u1", "u2")
    t = A.S(t, "u1", "u2", "x3")
    t = A.word(t, ["x2", A.beta, "x3"], "w")
    t = A.delta(t, "w", "w1", "w2")
    t = kron(t, gamma.relabel({"1": "g1", "2": "g2"}))
    t = A.word(t, ["u1", "g1", "w1"], "1")
    t = A.word(t, ["u2", "g2", "w2"], "2")
    return t.order(PAIR)


def _f_inv(A: QuasiHopfAlgebra, delta: Tensor) -> Tensor:
    # f⁻¹ = ΣΔ(S(x¹)αx²) δ (S⊗S)(Δ^op(x³))
    t = A.S(A.Phi_inv("x1", "x2", "x3"), "x1")
    t = A.word(t, ["x1", A.alpha, "x2"], "w")
    t = A.delta(t, "w", "w1", "w2")
    t = A.delta_op(t, "x3", "v1", "v2")
    t = A.S(t, "v1", "v2")
    t = kron(t, delta.relabel({"1": "d1", "2": "d2"}))
    t = A.word(t, ["w1", "d1", "v1"], "1")
    t = A.word(t, ["w2", "d2", "v2"], "2")
    return t.order(PAIR)


def twisted_phi(A: QuasiBialgebra, F: Tensor, F_inv: Tensor) -> Tensor:
    """``(1⊗F)(id⊗Δ)(F)Φ(Δ⊗id)(F⁻¹)(F⁻¹⊗1)``."""
    return A.product(
        TRIPLE,
        kron(A.one("1"), F.relabel({"1": "2", "2": "3"})),
        A.delta(F.relabel({"2": "x"}), "x", "2", "3"),
        A.Phi(),
        A.delta(F_inv.relabel({"1": "x", "2": "3"}), "x", "1", "2"),
        kron(F_inv, A.one("3")),
    ).order(TRIPLE)


def _twisted_phi_inv(A: QuasiBialgebra, F: Tensor, F_inv: Tensor) -> Tensor:
    # (F⊗1)(Δ⊗id)(F)Φ⁻¹(id⊗Δ)(F⁻¹)(1⊗F⁻¹)
    return A.product(
        TRIPLE,
        kron(F, A.one("3")),
        A.delta(F.relabel({"1": "x", "2": "3"}), "x", "1", "2"),
        A.Phi_inv(),
        A.delta(F_inv.relabel({"2": "x"}), "x", "2", "3"),
        kron(A.one("1"), F_inv.relabel({"1": "2", "2": "3"})),
    ).order(TRIPLE)


def _twist_report(A: QuasiHopfAlgebra, tw: dict[str, Tensor]) -> VerificationReport:
    report = VerificationReport("twist")
    f, f_inv = tw["f"], tw["f_inv"]
    one = A.one(*PAIR)
    report.check("twist-inverse-right", "f f⁻¹ = 1⊗1", A.product(PAIR, f, f_inv), one)
    report.check("twist-inverse-left", "f⁻¹ f = 1⊗1", A.product(PAIR, f_inv, f), one)

    h = A.universal("h", "a")
    inner = A.delta(A.S(h, "a"), "a", "1", "2")
    lhs = A.product(PAIR, f, inner, f_inv)
    rhs = A.S(A.delta_op(h, "a", "1", "2"), "1", "2")
    report.check("twist-antipode", "fΔ(S(h))f⁻¹ = (S⊗S)(Δ^cop(h))", lhs, rhs)

    delta_alpha = A.delta(A.el(A.alpha, "a"), "a", "1", "2")
    delta_beta = A.delta(A.el(A.beta, "a"), "a", "1", "2")
    report.check("twist-gamma", "fΔ(α) = γ", A.product(PAIR, f, delta_alpha), tw["gamma"])
    report.check("twist-delta", "Δ(β)f⁻¹ = δ", A.product(PAIR, delta_beta, f_inv), tw["delta"])

    rhs = A.S(A.Phi("3", "2", "1"), *TRIPLE)
    report.check("twist-reassociator", "Φ_f = (S⊗S⊗S)(X³⊗X²⊗X¹)", twisted_phi(A, f, f_inv), rhs)
    return report


def derive_twist(A: QuasiHopfAlgebra, validate: bool = True) -> DrinfeldTwist:
    """
    Compute ``γ``, ``δ``, the Drinfeld twist ``f`` and ``f⁻¹``.

    Args:
        A: A quasi-Hopf algebra passing :func:`~quasi_hopf.axioms.check_quasi_hopf`
        validate: Raise when a post-check fails

    Returns:
        The four elements of ``H⊗H`` (legs ``"1"``, ``"2"``) and the post-check report

    Raises:
        PostCheckError: If ``validate`` and a post-check fails, which signals inconsistent input
    """

    def compute() -> DrinfeldTwist:
        logger.debug(f"Deriving the Drinfeld twist of {A.name or 'algebra'}")
        gamma, delta = _gamma(A), _delta(A)
        tw = {"gamma": gamma, "delta": delta, "f": _f(A, gamma), "f_inv": _f_inv(A, delta)}
        return DrinfeldTwist(report=_twist_report(A, tw), **tw)

    result = cached(A, "twist", compute)
    if validate and not result.report.passed:
        raise PostCheckError("Drinfeld twist post-checks failed", result.report)
    return result


# -- p/q elements -------------------------------------------------------------------------------


def _pq(A: QuasiHopfAlgebra) -> dict[str, Tensor]:
    p_R = A.word(A.S(A.Phi_inv(), "3"), ["2", A.beta, "3"], "2").order(PAIR)
    t = A.S_inv(A.word(A.Phi(), [A.alpha, "3"], "3"), "3")
    q_R = A.word(t, ["3", "2"], "2").order(PAIR)
    t = A.S_inv(A.word(A.Phi(), ["1", A.beta], "1"), "1")
    p_L = A.word(t, ["2", "1"], "1").relabel({"3": "2"}).order(PAIR)
    t = A.S(A.Phi_inv(), "1")
    q_L = A.word(t, ["1", A.alpha, "2"], "1").relabel({"3": "2"}).order(PAIR)
    return {"p_R": p_R, "q_R": q_R, "p_L": p_L, "q_L": q_L}


def _pq_report(A: QuasiHopfAlgebra, pq: dict[str, Tensor], f: Tensor) -> VerificationReport:
    report = VerificationReport("pq")
    p_R, q_R, p_L, q_L = pq["p_R"], pq["q_R"], pq["p_L"], pq["q_L"]
    h = A.universal("h", "a")
    h_left = kron(A.universal("h", "1"), A.one("2"))
    h_right = kron(A.one("1"), A.universal("h", "2"))

    t = A.S(A.delta(A.delta(h, "a", "a", "b"), "a", "1", "2"), "b")
    lhs = A.mul(A.product(PAIR, t, p_R), "2", "b")
    report.check("pR-intertwiner", "ΣΔ(h₁)p_R[1⊗S(h₂)] = p_R(h⊗1)", lhs, A.product(PAIR, p_R, h_left))

    t = A.S_inv(A.delta(A.delta(h, "a", "a", "b"), "a", "1", "2"), "b")
    lhs = A.mul(A.product(PAIR, q_R, t), "b", "2", out="2")
    report.check("qR-intertwiner", "Σ[1⊗S⁻¹(h₂)]q_RΔ(h₁) = (h⊗1)q_R", lhs, A.product(PAIR, h_left, q_R))

    t = A.S_inv(A.delta(A.delta(h, "a", "b", "a"), "a", "1", "2"), "b")
    lhs = A.mul(A.product(PAIR, t, p_L), "1", "b")
    report.check("pL-intertwiner", "ΣΔ(h₂)p_L[S⁻¹(h₁)⊗1] = p_L(1⊗h)", lhs, A.product(PAIR, p_L, h_right))

    t = A.S(A.delta(A.delta(h, "a", "b", "a"), "a", "1", "2"), "b")
    lhs = A.mul(A.product(PAIR, q_L, t), "b", "1", out="1")
    report.check("qL-intertwiner", "Σ[S(h₁)⊗1]q_LΔ(h₂) = (1⊗h)q_L", lhs, A.product(PAIR, h_right, q_L))

    lhs = A.product(
        TRIPLE,
        kron(q_R, A.one("3")),
        A.delta(q_R.relabel({"1": "x", "2": "3"}), "x", "1", "2"),
        A.Phi_inv(),
    )
    t = A.delta(A.Phi("X1", "X2", "X3"), "X1", "d1", "d2")
    t = A.product(("d1", "d2"), q_R.relabel({"1": "d1", "2": "d2"}), t)
    t = A.delta(t, "d2", "2", "3").relabel({"d1": "1"})
    t = A.S_inv(t, "X2", "X3")
    twist_part = kron(A.one("1"), A.S_inv(f, "1", "2").relabel({"1": "3", "2": "2"}))
    rhs = A.product(TRIPLE, twist_part, t)
    rhs = A.mul(A.mul(rhs, "X3", "2", out="2"), "X2", "3", out="3")
    report.check(
        "qR-coproduct",
        "(q_R⊗1)(Δ⊗id)(q_R)Φ⁻¹ = Σ[1⊗S⁻¹(X³)⊗S⁻¹(X²)][1⊗S⁻¹(f²)⊗S⁻¹(f¹)](id⊗Δ)(q_RΔ(X¹))",
        lhs,
        rhs,
    )
    return report


def derive_pq(A: QuasiHopfAlgebra, validate: bool = True) -> PQElements:
    """
    Compute ``p_R``, ``q_R``, ``p_L`` and ``q_L`` and check their intertwining identities.

    Args:
        A: A quasi-Hopf algebra passing :func:`~quasi_hopf.axioms.check_quasi_hopf`
        validate: Raise when a post-check fails

    Raises:
        PostCheckError: If ``validate`` and a post-check fails
    """

    def compute() -> PQElements:
        logger.debug(f"Deriving p/q elements of {A.name or 'algebra'}")
        pq = _pq(A)
        f = derive_twist(A, validate=False).f
        return PQElements(report=_pq_report(A, pq, f), **pq)

    result = cached(A, "pq", compute)
    if validate and not result.report.passed:
        raise PostCheckError("p/q post-checks failed", result.report)
    return result


def derive_U(A: QuasiHopfAlgebra) -> Tensor:
    """``U = Σg¹S(q²) ⊗ g²S(q¹)`` with ``f⁻¹ = g¹⊗g²`` and ``q_R = q¹⊗q²``."""

    def compute() -> Tensor:
        g = derive_twist(A, validate=False).f_inv.relabel({"1": "g1", "2": "g2"})
        q = derive_pq(A, validate=False).q_R.relabel({"1": "q1", "2": "q2"})
        t = A.S(kron(g, q), "q1", "q2")
        t = A.word(t, ["g1", "q2"], "1")
        return A.word(t, ["g2", "q1"], "2").order(PAIR)

    return cached(A, "U", compute)


def check_lemma_identities(A: QuasiHopfAlgebra) -> VerificationReport:
    """
    Identities relating ``q_R``, ``q_L``, ``f`` and ``Φ`` that underlie the quantum
    commutativity of ``H₀``.

    The identities tying ``f`` to ``α`` and ``β`` hold for ``ε(α) = ε(β) = 1``, so a rescalable
    pair is normalized first.
    """
    A = A.with_alpha_beta_normalized()
    report = VerificationReport("lemma")
    tw = derive_twist(A, validate=False)
    pq = derive_pq(A, validate=False)
    q_R, f, f_inv = pq.q_R, tw.f, tw.f_inv

    t = A.product(PAIR, q_R, A.Phi_inv("1", "2", "3"))
    lhs = A.word(A.S(t, "2"), ["2", "3"], "2")
    report.check("qR-phi-inv-alpha", "Σq¹y¹⊗S(q²y²)y³ = 1⊗α", lhs, kron(A.one("1"), A.el(A.alpha, "2")))

    lhs = A.product(TRIPLE, A.Phi(), A.delta(f_inv.relabel({"1": "x", "2": "3"}), "x", "1", "2"))

    def twist_term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.word(t, [z["g1"], z["X3"]], "1")
        t = A.word(t, [z["g21"], z["G1"], z["X2"]], "2")
        return A.word(t, [z["g22"], z["G2"], z["X1"]], "3")

    constants = [
        A.delta(f_inv.relabel({"1": "g1", "2": "g2"}), "g2", "g21", "g22"),
        A.S(A.Phi("X1", "X2", "X3"), "X1", "X2", "X3"),
        f_inv.relabel({"1": "G1", "2": "G2"}),
    ]
    rhs = A.product(PAIR, A.expand(constant(ONE), constants, twist_term), f)
    report.check(
        "phi-comult-twist-inv",
        "Φ(Δ⊗id)(f⁻¹) = Σg¹S(X³)f¹ ⊗ g²₁G¹S(X²)f² ⊗ g²₂G²S(X¹)",
        lhs,
        rhs,
    )

    lhs = A.word(A.S(f_inv, "1"), ["1", A.alpha, "2"], "1")
    report.check("twist-inv-alpha", "ΣS(g¹)αg² = S(β)", lhs, A.S(A.el(A.beta, "1"), "1"))
    lhs = A.word(A.S(f, "2"), ["1", A.beta, "2"], "1")
    report.check("twist-beta", "Σf¹βS(f²) = S(α)", lhs, A.S(A.el(A.alpha, "1"), "1"))

    def q_term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.S(A.word(t, [z["q22"], z["X3"]], "a"), "a")
        t = A.S(A.word(t, [z["q21"], z["X2"]], "b"), "b")
        t = A.word(t, [z["q1"], z["X1"], A.beta, "b"], "c")
        t = A.word(t, ["a", z["f1"]], "1")
        return A.S(A.word(t, ["c", z["f2"]], "2"), "2")

    constants = [
        A.delta(q_R.relabel({"1": "q1", "2": "q2"}), "q2", "q21", "q22"),
        A.Phi("X1", "X2", "X3"),
        f.relabel({"1": "f1", "2": "f2"}),
    ]
    t = A.expand(constant(ONE), constants, q_term)
    report.check("qR-twist-qL", "ΣS(q²₂X³)f¹ ⊗ S(q¹X¹βS(q²₁X²)f²) = (id⊗S)(q_L)", t, A.S(pq.q_L, "2"))

    lhs = A.delta(q_R.relabel({"2": "x"}), "x", "2", "3")

    def comult_term(t: Tensor, z: dict[str, Factor]) -> Tensor:
        t = A.S_inv(A.word(t, [z["x3"], z["g2"]], "s2"), "s2")
        t = A.S_inv(A.word(t, [z["Y3"], z["x2"], z["g1"]], "s3"), "s3")
        t = A.word(t, [z["Q1"], z["Y1"], z["e1"]], "1")
        t = A.word(t, ["s2", z["Q2"], z["q1"], z["Y21"], z["e21"]], "2")
        return A.word(t, ["s3", z["q2"], z["Y22"], z["e22"]], "3")

    constants = [
        A.delta(A.delta(A.Phi_inv("x1", "x2", "x3"), "x1", "e1", "e2"), "e2", "e21", "e22"),
        f_inv.relabel({"1": "g1", "2": "g2"}),
        A.delta(A.Phi("Y1", "Y2", "Y3"), "Y2", "Y21", "Y22"),
        q_R.relabel({"1": "Q1", "2": "Q2"}),
        q_R.relabel({"1": "q1", "2": "q2"}),
    ]
    rhs = A.expand(constant(ONE), constants, comult_term)
    report.check(
        "qR-comult-expansion",
        "(id⊗Δ)(q_R) = ΣQ¹Y¹x¹₁ ⊗ S⁻¹(x³g²)Q²q¹Y²₁x¹₍₂,₁₎ ⊗ S⁻¹(Y³x²g¹)q²Y²₂x¹₍₂,₂₎",
        lhs,
        rhs,
    )
    return report


# -- twisting and variants ----------------------------------------------------------------------


def twist_algebra(A: QuasiHopfAlgebra, F: Tensor, validate: bool = True) -> QuasiHopfAlgebra:
    """
    Twist ``A`` by a gauge transformation ``F ∈ H⊗H``.

    Args:
        A: The algebra to twist
        F: Element on legs ``"1"``, ``"2"`` with ``(ε⊗id)(F) = (id⊗ε)(F) = 1``
        validate: Verify the result with the quasi-Hopf checkers

    Returns:
        ``H_F`` with ``Δ_F = FΔF⁻¹``, ``Φ_F``, ``α_F = ΣS(G¹)αG²`` and ``β_F = ΣF¹βS(F²)``

    Raises:
        PreconditionError: If the counit condition fails
        NotInvertibleError: If ``F`` is not invertible
        PostCheckError: If ``validate`` and the twisted algebra fails a check
    """
    F = F.order(PAIR)
    unit = A.el(A.unit, "1")
    if not (map_equal(A.eps(F, "1").relabel({"2": "1"}), unit) and map_equal(A.eps(F, "2"), unit)):
        raise PreconditionError("a twist must satisfy (ε⊗id)(F) = (id⊗ε)(F) = 1")
    try:
        F_inv = A.inverse_element(F, PAIR)
    except NotInvertibleError as e:
        raise NotInvertibleError("the twist F is not invertible in H⊗H") from e

    comult = A.product(PAIR, F, A.delta(A.universal("h", "a"), "a", "1", "2"), F_inv)
    alpha = A.word(A.S(F_inv, "1"), ["1", A.alpha, "2"], "1")
    beta = A.word(A.S(F, "2"), ["1", A.beta, "2"], "1")
    twisted = QuasiHopfAlgebra(
        A.mult,
        A.unit,
        comult.order(("h", "1", "2")).data,
        A.counit,
        twisted_phi(A, F, F_inv).data,
        _twisted_phi_inv(A, F, F_inv).data,
        A.antipode,
        alpha.data,
        beta.data,
        antipode_inv=A.antipode_inv,
        name=f"{A.name}^F" if A.name else "",
    )
    if validate:
        _validate(twisted, "twisted algebra")
    return twisted


def _validate(A: QuasiHopfAlgebra, what: str) -> None:
    report = VerificationReport.merged(what, [check_quasi_bialgebra(A), check_quasi_hopf(A)])
    if not report.passed:
        raise PostCheckError(f"{what} fails the quasi-Hopf axioms", report)


def op(A: QuasiHopfAlgebra, validate: bool = False) -> QuasiHopfAlgebra:
    """``H^op``: opposite product, ``Φ⁻¹``, ``S⁻¹``, ``α = S⁻¹(β)``, ``β = S⁻¹(α)``."""
    S_inv = A.S_inverse_matrix
    result = QuasiHopfAlgebra(
        np.transpose(A.mult, (1, 0, 2)),
        A.unit,
        A.comult,
        A.counit,
        A.phi_inv,
        A.phi,
        S_inv,
        A.beta.dot(S_inv),
        A.alpha.dot(S_inv),
        antipode_inv=A.antipode,
        name=f"{A.name}^op" if A.name else "",
    )
    if validate:
        _validate(result, "op algebra")
    return result


def cop(A: QuasiHopfAlgebra, validate: bool = False) -> QuasiHopfAlgebra:
    """``H^cop``: opposite coproduct, ``(Φ⁻¹)^{321}``, ``S⁻¹``, ``α = S⁻¹(α)``, ``β = S⁻¹(β)``."""
    S_inv = A.S_inverse_matrix
    result = QuasiHopfAlgebra(
        A.mult,
        A.unit,
        np.transpose(A.comult, (0, 2, 1)),
        A.counit,
        np.transpose(A.phi_inv, (2, 1, 0)),
        np.transpose(A.phi, (2, 1, 0)),
        S_inv,
        A.alpha.dot(S_inv),
        A.beta.dot(S_inv),
        antipode_inv=A.antipode,
        name=f"{A.name}^cop" if A.name else "",
    )
    if validate:
        _validate(result, "cop algebra")
    return result


def opcop(A: QuasiHopfAlgebra, validate: bool = False) -> QuasiHopfAlgebra:
    """``H^{op,cop}``: both opposites, ``Φ^{321}``, ``S``, ``α = β``, ``β = α``."""
    result = QuasiHopfAlgebra(
        np.transpose(A.mult, (1, 0, 2)),
        A.unit,
        np.transpose(A.comult, (0, 2, 1)),
        A.counit,
        np.transpose(A.phi, (2, 1, 0)),
        np.transpose(A.phi_inv, (2, 1, 0)),
        A.antipode,
        A.beta,
        A.alpha,
        antipode_inv=A.antipode_inv,
        name=f"{A.name}^opcop" if A.name else "",
    )
    if validate:
        _validate(result, "opcop algebra")
    return result


def variants(
    A: QuasiHopfAlgebra, validate: bool = True
) -> tuple[QuasiHopfAlgebra, QuasiHopfAlgebra, QuasiHopfAlgebra]:
    """
    The ``op``, ``cop`` and ``opcop`` quasi-Hopf algebras of ``A``.

    Raises:
        PostCheckError: If ``validate`` and a variant fails the quasi-Hopf axioms
    """
    return op(A, validate), cop(A, validate), opcop(A, validate)


def same_structure(A: QuasiHopfAlgebra, B: QuasiHopfAlgebra) -> bool:
    """Literal equality of all structure constants."""
    pairs = zip(A._arrays(), B._arrays(), strict=True)
    return all(a.shape == b.shape and map_equal(a, b).equal for (_, a), (_, b) in pairs)


def derived_elements(A: QuasiHopfAlgebra) -> dict[str, Tensor]:
    """All canonical elements, keyed by name, for dumps and reports."""
    tw = derive_twist(A, validate=False)
    pq = derive_pq(A, validate=False)
    return {
        "gamma": tw.gamma,
        "delta": tw.delta,
        "f": tw.f,
        "f_inv": tw.f_inv,
        "p_R": pq.p_R,
        "q_R": pq.q_R,
        "p_L": pq.p_L,
        "q_L": pq.q_L,
        "U": derive_U(A),
    }
