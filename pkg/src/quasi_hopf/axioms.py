"""Axiom checkers for quasi-bialgebras and quasi-Hopf algebras."""

import logging

from .algebra import QuasiBialgebra, QuasiHopfAlgebra
from .report import VerificationReport, Witness
from .tensor import constant, kron

logger = logging.getLogger(__name__)

LEGS3 = ("1", "2", "3")
LEGS4 = ("1", "2", "3", "4")


def check_quasi_bialgebra(A: QuasiBialgebra) -> VerificationReport:
    """
    Verify the quasi-bialgebra axioms of ``A``.

    Every identity is quantified over all basis elements through universal legs.

    Args:
        A: The structure constants to verify

    Returns:
        Report with one entry per axiom
    """
    report = VerificationReport("qbi")
    u = A.universal

    # algebra
    t = kron(u("i", "a"), u("j", "b"), u("k", "c"))
    left = A.mul(A.mul(t, "a", "b"), "a", "c")
    right = A.mul(A.mul(t, "b", "c"), "a", "b")
    report.check("associativity", "(ab)c = a(bc)", left, right)
    unit = A.el(A.unit, "b")
    report.check("unit-left", "1a = a", A.mul(kron(unit, u("i", "a")), "b", "a", out="a"), u("i", "a"))
    report.check("unit-right", "a1 = a", A.mul(kron(u("i", "a"), unit), "a", "b"), u("i", "a"))

    # Δ and ε are algebra maps
    t = kron(u("i", "a"), u("j", "b"))
    lhs = A.delta(A.mul(t, "a", "b"), "a", "1", "2")
    rhs = A.product(("1", "2"), A.delta(u("i", "a"), "a", "1", "2"), A.delta(u("j", "b"), "b", "1", "2"))
    report.check("comult-multiplicative", "Δ(ab) = Δ(a)Δ(b)", lhs, rhs)
    report.check("comult-unit", "Δ(1) = 1⊗1", A.delta(A.el(A.unit, "a"), "a", "1", "2"), A.one("1", "2"))
    report.check(
        "counit-multiplicative",
        "ε(ab) = ε(a)ε(b)",
        A.eps(A.mul(t, "a", "b"), "a"),
        kron(A.counit_of("i"), A.counit_of("j")),
    )
    report.check("counit-unit", "ε(1) = 1", A.eps(A.el(A.unit, "a"), "a"), constant(1))

    # quasi-coassociativity
    h = u("h", "a")
    lhs = A.delta(A.delta(h, "a", "a", "r"), "r", "b", "c")
    inner = A.delta(A.delta(h, "a", "l", "c"), "l", "a", "b")
    rhs = A.product(("a", "b", "c"), A.Phi("a", "b", "c"), inner, A.Phi_inv("a", "b", "c"))
    report.check("quasi-coassociativity", "(id⊗Δ)Δ(h) = Φ(Δ⊗id)Δ(h)Φ⁻¹", lhs, rhs)
    report.check("comult-counit-left", "(ε⊗id)Δ(h) = h", A.eps(A.delta(h, "a", "x", "a"), "x"), h)
    report.check("comult-counit-right", "(id⊗ε)Δ(h) = h", A.eps(A.delta(h, "a", "a", "x"), "x"), h)

    # reassociator
    lhs = A.product(
        LEGS4,
        kron(A.one("1"), A.Phi("2", "3", "4")),
        A.delta(A.Phi("1", "x", "4"), "x", "2", "3"),
        kron(A.Phi("1", "2", "3"), A.one("4")),
    )
    rhs = A.product(
        LEGS4,
        A.delta(A.Phi("1", "2", "x"), "x", "3", "4"),
        A.delta(A.Phi("x", "3", "4"), "x", "1", "2"),
    )
    report.check("pentagon", "(1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) = (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ)", lhs, rhs)
    report.check("phi-counit-middle", "(id⊗ε⊗id)(Φ) = 1⊗1", A.eps(A.Phi("1", "x", "2"), "x"), A.one("1", "2"))
    report.check("phi-counit-first", "(ε⊗id⊗id)(Φ) = 1⊗1", A.eps(A.Phi("x", "1", "2"), "x"), A.one("1", "2"))
    report.check("phi-counit-last", "(id⊗id⊗ε)(Φ) = 1⊗1", A.eps(A.Phi("1", "2", "x"), "x"), A.one("1", "2"))
    one3 = A.one(*LEGS3)
    report.check("phi-invertible-right", "ΦΦ⁻¹ = 1⊗1⊗1", A.product(LEGS3, A.Phi(), A.Phi_inv()), one3)
    report.check("phi-invertible-left", "Φ⁻¹Φ = 1⊗1⊗1", A.product(LEGS3, A.Phi_inv(), A.Phi()), one3)

    logger.info(f"Quasi-bialgebra check of {A.name or 'algebra'}: {report.summary()}")
    return report


def check_quasi_hopf(A: QuasiHopfAlgebra) -> VerificationReport:
    """
    Verify the antipode axioms of ``A``.

    Run :func:`check_quasi_bialgebra` first; this report only covers ``S``, ``α`` and ``β``.

    Args:
        A: The quasi-Hopf algebra to verify

    Returns:
        Report with one entry per axiom
    """
    report = VerificationReport("qhopf")
    u = A.universal

    t = kron(u("i", "a"), u("j", "b"))
    lhs = A.S(A.mul(t, "a", "b"), "a")
    rhs = A.mul(A.S(t, "a", "b"), "b", "a", out="a")
    report.check("antipode-antimultiplicative", "S(ab) = S(b)S(a)", lhs, rhs)
    report.check("antipode-unit", "S(1) = 1", A.S(A.el(A.unit, "a"), "a"), A.el(A.unit, "a"))
    h = u("h", "a")
    report.check("antipode-inverse-right", "S(S⁻¹(h)) = h", A.S(A.S_inv(h, "a"), "a"), h)
    report.check("antipode-inverse-left", "S⁻¹(S(h)) = h", A.S_inv(A.S(h, "a"), "a"), h)

    split = A.delta(h, "a", "a", "b")
    lhs = A.word(A.S(split, "a"), ["a", A.alpha, "b"], "a")
    report.check("antipode-alpha", "ΣS(h₁)αh₂ = ε(h)α", lhs, kron(A.counit_of("h"), A.el(A.alpha, "a")))
    lhs = A.word(A.S(split, "b"), ["a", A.beta, "b"], "a")
    report.check("antipode-beta", "Σh₁βS(h₂) = ε(h)β", lhs, kron(A.counit_of("h"), A.el(A.beta, "a")))

    one = A.el(A.unit, "1")
    lhs = A.word(A.S(A.Phi(), "2"), ["1", A.beta, "2", A.alpha, "3"], "1")
    report.check("normalization-phi", "ΣX¹βS(X²)αX³ = 1", lhs, one)
    lhs = A.word(A.S(A.Phi_inv(), "1"), ["1", A.alpha, "2", A.beta, "3"], "1")
    report.check("normalization-phi-inv", "ΣS(x¹)αx²βS(x³) = 1", lhs, one)

    product = A.counit.dot(A.alpha) * A.counit.dot(A.beta)
    witness = None if product == 1 else Witness((), product, 1)
    report.record("alpha-beta-counit", "ε(α)ε(β) = 1", product == 1, witness=witness)
    report.check("counit-antipode", "ε∘S = ε", A.eps(A.S(h, "a"), "a"), A.counit_of("h"))

    logger.info(f"Antipode check of {A.name or 'algebra'}: {report.summary()}")
    return report


def is_quasi_hopf(A: QuasiHopfAlgebra) -> bool:
    return check_quasi_bialgebra(A).passed and check_quasi_hopf(A).passed
