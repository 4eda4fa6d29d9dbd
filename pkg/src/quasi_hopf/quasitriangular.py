"""Quasitriangular structures: R-matrix axioms, the element ``u``, and R-induced YD modules."""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .algebra import QuasiHopfAlgebra
from .category import Module, category_ops
from .derived import PAIR, TRIPLE, cached, derive_pq, derive_twist
from .exceptions import NotInvertibleError, PostCheckError, ShapeError
from .report import VerificationReport, Witness
from .tensor import Tensor, as_exact, element, kron
from .utils import format_scalar
from .yetter_drinfeld import YDModule, check_yd, yd_braiding

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QTStructure:
    """A quasi-Hopf algebra together with a candidate R-matrix ``R ∈ H⊗H``."""

    algebra: QuasiHopfAlgebra
    R: np.ndarray
    name: str = field(default="", kw_only=True)

    def __post_init__(self) -> None:
        array = as_exact(self.R)
        d = self.algebra.dim
        if array.shape != (d, d):
            raise ShapeError(f"R has shape {array.shape}, expected {(d, d)}")
        array.flags.writeable = False
        object.__setattr__(self, "R", array)

    def el(self, a: str = "1", b: str = "2") -> Tensor:
        """``R¹⊗R²`` on legs ``a`` and ``b``."""
        return element(self.R, a, b)

    def embedded(self, i: str, j: str) -> Tensor:
        """``R_{ij}`` in ``H⊗H⊗H``: ``R`` on legs ``i``, ``j`` and ``1`` on the remaining leg."""
        (k,) = set(TRIPLE) - {i, j}
        return kron(self.el(i, j), self.algebra.one(k))

    @cached_property
    def R_inv(self) -> Tensor:
        """
        Raises:
            NotInvertibleError: If ``R`` has no inverse in ``H⊗H``
        """
        return self.algebra.inverse_element(self.el(), PAIR)

    @cached_property
    def fingerprint(self) -> str:
        digest = hashlib.sha256(self.algebra.fingerprint.encode())
        digest.update(",".join(format_scalar(x) for x in self.R.reshape(-1)).encode())
        return digest.hexdigest()


@dataclass(frozen=True, eq=False)
class DrinfeldElement:
    u: Tensor
    u_inv: Tensor
    report: VerificationReport = field(repr=False)


def check_qt(QT: QTStructure) -> VerificationReport:
    """
    Verify that ``R`` is a quasitriangular structure.

    Entries: ``qt-comult-left``, ``qt-comult-right``, ``qt-intertwiner``, ``qt-counit-left``,
    ``qt-counit-right`` and ``r-invertible``.
    """
    A = QT.algebra
    report = VerificationReport("qt")

    lhs = A.delta(QT.el("x", "3"), "x", "1", "2")
    rhs = A.product(
        TRIPLE,
        A.Phi("3", "1", "2"),
        QT.embedded("1", "3"),
        A.Phi_inv("1", "3", "2"),
        QT.embedded("2", "3"),
        A.Phi(),
    )
    report.check("qt-comult-left", "(Δ⊗id)(R) = Φ₃₁₂R₁₃Φ⁻¹₁₃₂R₂₃Φ", lhs, rhs)

    lhs = A.delta(QT.el("1", "x"), "x", "2", "3")
    rhs = A.product(
        TRIPLE,
        A.Phi_inv("2", "3", "1"),
        QT.embedded("1", "3"),
        A.Phi("2", "1", "3"),
        QT.embedded("1", "2"),
        A.Phi_inv(),
    )
    report.check("qt-comult-right", "(id⊗Δ)(R) = Φ⁻¹₂₃₁R₁₃Φ₂₁₃R₁₂Φ⁻¹", lhs, rhs)

    h = A.universal("h", "a")
    lhs = A.product(PAIR, A.delta_op(h, "a", "1", "2"), QT.el())
    rhs = A.product(PAIR, QT.el(), A.delta(h, "a", "1", "2"))
    report.check("qt-intertwiner", "Δ^cop(h)R = RΔ(h)", lhs, rhs)

    unit = A.el(A.unit, "1")
    report.check("qt-counit-left", "(ε⊗id)(R) = 1", A.eps(QT.el("x", "1"), "x"), unit)
    report.check("qt-counit-right", "(id⊗ε)(R) = 1", A.eps(QT.el("1", "x"), "x"), unit)

    try:
        _ = QT.R_inv
        invertible = True
    except NotInvertibleError:
        invertible = False
    report.record("r-invertible", "R is invertible in H⊗H", invertible)
    logger.info(f"Quasitriangularity check of {QT.name or A.name or 'structure'}: {report.summary()}")
    return report


def is_quasitriangular(QT: QTStructure) -> bool:
    return check_qt(QT).passed


def _u(QT: QTStructure) -> tuple[Tensor, Tensor]:
    A = QT.algebra
    p = derive_pq(A, validate=False).p_R.relabel({"1": "p1", "2": "p2"})
    # u = ΣS(R²p²)αR¹p¹
    t = A.S(A.word(kron(QT.el("r1", "r2"), p), ["r2", "p2"], "a"), "a")
    u = A.word(t, ["a", A.alpha, "r1", "p1"], "1")
    # u⁻¹ = ΣX¹R²p²S(S(X²R¹p¹)αX³)
    t = kron(A.Phi("X1", "X2", "X3"), QT.el("r1", "r2"), p)
    t = A.S(A.word(t, ["X2", "r1", "p1"], "b"), "b")
    t = A.S(A.word(t, ["b", A.alpha, "X3"], "c"), "c")
    u_inv = A.word(t, ["X1", "r2", "p2", "c"], "1")
    return u, u_inv


def _u_report(QT: QTStructure, u: Tensor, u_inv: Tensor) -> VerificationReport:
    A = QT.algebra
    report = VerificationReport("u")
    one = A.el(A.unit, "1")
    report.check("u-inverse-right", "uu⁻¹ = 1", A.product(("1",), u, u_inv), one)
    report.check("u-inverse-left", "u⁻¹u = 1", A.product(("1",), u_inv, u), one)
    value = A.eps(u, "1").item()
    witness = None if value == 1 else Witness((), value, 1)
    report.record("u-counit", "ε(u) = 1", value == 1, witness=witness)
    h = A.universal("h", "1")
    lhs = A.S(h, "1", "1")
    rhs = A.product(("1",), u, h, u_inv)
    report.check("antipode-square", "S²(h) = uhu⁻¹", lhs, rhs)
    return report


def derive_u(QT: QTStructure, validate: bool = True) -> DrinfeldElement:
    """
    The element ``u = ΣS(R²p²)αR¹p¹`` and its closed-form inverse ``u⁻¹ = ΣX¹R²p²S(S(X²R¹p¹)αX³)``.

    Args:
        QT: A structure passing :func:`check_qt`
        validate: Raise when a post-check fails

    Returns:
        ``u`` and ``u⁻¹`` on leg ``"1"`` with the post-check report

    Raises:
        PostCheckError: If ``validate`` and ``u⁻¹`` is not inverse to ``u``, ``ε(u) ≠ 1``,
            or ``S²`` is not conjugation by ``u``
    """

    def compute() -> DrinfeldElement:
        logger.debug(f"Deriving u for {QT.name or 'structure'}")
        u, u_inv = _u(QT)
        return DrinfeldElement(u, u_inv, _u_report(QT, u, u_inv))

    result = cached(QT.algebra, f"u:{QT.fingerprint}", compute)
    if validate and not result.report.passed:
        raise PostCheckError("u post-checks failed", result.report)
    return result


def check_ext(QT: QTStructure) -> VerificationReport:
    A = QT.algebra
    tw = derive_twist(A, validate=False)
    report = VerificationReport("r-twist")
    lhs = A.product(PAIR, A.swap(tw.f, "1", "2"), QT.el(), tw.f_inv)
    report.check("r-twist-antipode", "f₂₁Rf⁻¹ = (S⊗S)(R)", lhs, A.S(QT.el(), "1", "2"))
    return report


def check_qybe(QT: QTStructure) -> VerificationReport:
    """The quasi-Yang-Baxter equation as an identity in ``H⊗H⊗H``."""
    A = QT.algebra
    R12, R13, R23 = QT.embedded("1", "2"), QT.embedded("1", "3"), QT.embedded("2", "3")
    lhs = A.product(TRIPLE, R12, A.Phi("3", "1", "2"), R13, A.Phi_inv("1", "3", "2"), R23, A.Phi())
    rhs = A.product(TRIPLE, A.Phi("3", "2", "1"), R23, A.Phi_inv("2", "3", "1"), R13, A.Phi("2", "1", "3"), R12)
    report = VerificationReport("r-yang-baxter")
    report.check("r-yang-baxter", "R₁₂Φ₃₁₂R₁₃Φ⁻¹₁₃₂R₂₃Φ = Φ₃₂₁R₂₃Φ⁻¹₂₃₁R₁₃Φ₂₁₃R₁₂", lhs, rhs)
    return report


def induced_yd(QT: QTStructure, M: Module, validate: bool = True) -> YDModule:
    """
    The left YD structure ``λ(m) = ΣR²⊗R¹·m`` on a left module ``M``.

    Its YD braiding ``m⊗n ↦ Σm₍₋₁₎·n⊗m₍₀₎`` is the braiding ``ΣR²·n⊗R¹·m`` of the
    module category; with ``validate`` both agree and the result passes :func:`check_yd`.

    Raises:
        PostCheckError: If ``validate`` and a post-check fails, which signals an invalid ``R``
    """
    coaction = np.transpose(np.tensordot(QT.R, M.action, axes=(0, 0)), (1, 0, 2))
    Y = YDModule(QT.algebra, M.action, np.asarray(coaction, dtype=object), "left", name=M.name)
    if validate:
        report = VerificationReport("induced-yd").extend(check_yd(Y))
        c, _ = yd_braiding(Y, Y, validate=False)
        R_braiding = category_ops(QT.algebra, QT.el()).braiding(M, M)
        report.check("induced-braiding", "Σm₍₋₁₎·n⊗m₍₀₎ = ΣR²·n⊗R¹·m", c, R_braiding)
        if not report.passed:
            raise PostCheckError(f"R-induced coaction on {M.name or 'module'} fails its post-checks", report)
    return Y
