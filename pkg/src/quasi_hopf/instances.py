"""
Shipped example structures.

Every catalog entry is a ground quasi-Hopf algebra with an optional R-matrix, optional
Yetter-Drinfeld modules over it and optional braided Hopf algebras in its YD category.
Building an entry with ``validate=True`` runs every applicable checker and refuses to
return data that fails.

Basis conventions:

* ``kZ₂`` and ``H(2)``: ``e_0 = 1``, ``e_1 = g``
* ``H₄``: ``e_{a+2b} = g^a x^b``, i.e. ``(1, g, x, gx)``, with ``g² = 1``, ``x² = 0``, ``xg = -gx``,
  ``Δ(g) = g⊗g``, ``Δ(x) = x⊗1 + g⊗x``, ``S(x) = -gx``
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import QuasiHopfAlgebra
from .axioms import check_quasi_bialgebra, check_quasi_hopf
from .braided import BraidedHopfAlgebra, braided_from_structure, check_braided_hopf
from .exceptions import PostCheckError
from .quasitriangular import QTStructure, check_qt
from .report import VerificationReport
from .tensor import identity_matrix, zeros
from .yetter_drinfeld import FLAVORS, Flavor, YDModule, check_yd

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
SIGNS = (1, -1)


@dataclass(frozen=True, eq=False)
class Instance:
    """A named bundle of structure constants, as stored in a ``.qha`` file."""

    name: str
    algebra: QuasiHopfAlgebra
    qt: QTStructure | None = None
    modules: tuple[YDModule, ...] = ()
    braided: tuple[BraidedHopfAlgebra, ...] = field(default=())

    def module(self, name: str) -> YDModule:
        for M in self.modules:
            if M.name == name:
                return M
        raise KeyError(name)


def _group_z2_constants() -> dict[str, np.ndarray]:
    mult = zeros((2, 2, 2))
    comult = zeros((2, 2, 2))
    for i in range(2):
        comult[i, i, i] = 1
        for j in range(2):
            mult[i, j, (i + j) % 2] = 1
    phi = zeros((2, 2, 2))
    phi[0, 0, 0] = 1
    return {
        "mult": mult,
        "unit": np.array([1, 0], dtype=object),
        "comult": comult,
        "counit": np.array([1, 1], dtype=object),
        "phi": phi,
        "antipode": identity_matrix(2),
    }


def trivial_field_algebra() -> QuasiHopfAlgebra:
    """The ground field ``k`` as a one-dimensional Hopf algebra."""
    one = np.ones((1, 1, 1), dtype=object)
    vector = np.ones(1, dtype=object)
    return QuasiHopfAlgebra(one, vector, one, vector, one, one, identity_matrix(1), vector, vector, name="k")


def group_algebra_z2() -> QuasiHopfAlgebra:
    c = _group_z2_constants()
    return QuasiHopfAlgebra(
        c["mult"],
        c["unit"],
        c["comult"],
        c["counit"],
        c["phi"],
        c["phi"],
        c["antipode"],
        c["unit"],
        c["unit"],
        name="kZ2",
    )


def r_trivial(A: QuasiHopfAlgebra) -> QTStructure:
    """``R = 1⊗1``; quasitriangular exactly when ``A`` is cocommutative."""
    return QTStructure(A, np.outer(A.unit, A.unit), name="R=1⊗1")


def r_z2(A: QuasiHopfAlgebra) -> QTStructure:
    """``R_g = ½(1⊗1 + 1⊗g + g⊗1 - g⊗g)`` on the first two basis vectors of ``A``."""
    R = zeros((A.dim, A.dim))
    for a in range(2):
        for b in range(2):
            R[a, b] = HALF * SIGNS[a * b]
    return QTStructure(A, R, name="R_g")


def h2_quasi() -> QuasiHopfAlgebra:
    """
    The two-dimensional quasi-Hopf algebra with nontrivial reassociator.

    ``kZ₂`` as a bialgebra with ``Φ = 1⊗1⊗1 - 2p₋⊗p₋⊗p₋``, ``p₋ = (1 - g)/2``, ``S = id``,
    ``α = g`` and ``β = 1``. Since ``p₋`` is idempotent, ``Φ⁻¹ = Φ``.
    """
    c = _group_z2_constants()
    p_minus = np.array([HALF, -HALF], dtype=object)
    cube = np.multiply.outer(np.multiply.outer(p_minus, p_minus), p_minus)
    phi = c["phi"] - 2 * cube
    return QuasiHopfAlgebra(
        c["mult"],
        c["unit"],
        c["comult"],
        c["counit"],
        phi,
        phi,
        c["antipode"],
        np.array([0, 1], dtype=object),
        c["unit"],
        name="H(2)",
    )


def _h4_index(a: int, b: int) -> int:
    return a + 2 * b


def sweedler_h4() -> QuasiHopfAlgebra:
    """Sweedler's four-dimensional Hopf algebra ``H₄``, with trivial reassociator."""
    mult = zeros((4, 4, 4))
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    if b + d > 1:
                        continue
                    # g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
                    mult[_h4_index(a, b), _h4_index(c, d), _h4_index((a + c) % 2, b + d)] = SIGNS[b * c]
    comult = zeros((4, 4, 4))
    comult[0, 0, 0] = 1
    comult[1, 1, 1] = 1
    comult[2, 2, 0] = 1  # x⊗1
    comult[2, 1, 2] = 1  # g⊗x
    comult[3, 3, 1] = 1  # gx⊗g
    comult[3, 0, 3] = 1  # 1⊗gx
    antipode = zeros((4, 4))
    antipode[0, 0] = 1
    antipode[1, 1] = 1
    antipode[2, 3] = -1
    antipode[3, 2] = 1
    unit = np.array([1, 0, 0, 0], dtype=object)
    phi = zeros((4, 4, 4))
    phi[0, 0, 0] = 1
    return QuasiHopfAlgebra(
        mult,
        unit,
        comult,
        np.array([1, 1, 0, 0], dtype=object),
        phi,
        phi,
        antipode,
        unit,
        unit,
        name="H4",
    )


def r_h4(A: QuasiHopfAlgebra, lam: Fraction | int) -> QTStructure:
    """
    The family ``R_λ = R_g(1⊗1 + λ gx⊗x)`` on ``H₄``.

    Expanded: ``½(1⊗1 + 1⊗g + g⊗1 - g⊗g) + λ/2 (x⊗x - x⊗gx + gx⊗x + gx⊗gx)``.
    """
    lam = Fraction(lam)
    R = r_z2(A).R.copy()
    for a in range(2):
        for b in range(2):
            # (g^a⊗g^b)(gx⊗x) = g^{a+1}x ⊗ g^b x
            R[_h4_index((a + 1) % 2, 1), _h4_index(b, 1)] += lam * HALF * SIGNS[a * b]
    return QTStructure(A, R, name=f"R_{lam}")


def yd_line(A: QuasiHopfAlgebra, sign: int, degree: int, flavor: Flavor = "left", name: str = "") -> YDModule:
    """
    One-dimensional YD module over ``kZ₂``: ``g`` acts by ``sign``, the coaction is ``v ↦ g^degree⊗v``.

    ``kZ₂`` is commutative and cocommutative, so the same constants are a YD module in every flavor.
    """
    action = zeros((2, 1, 1))
    action[0, 0, 0] = 1
    action[1, 0, 0] = sign
    coaction = zeros((1, 2, 1))
    coaction[0, degree, 0] = 1
    return YDModule(A, action, coaction, flavor, name=name)


def unit_yd(A: QuasiHopfAlgebra, flavor: Flavor = "left") -> YDModule:
    """The monoidal unit ``k``: ``h·1 = ε(h)``, ``λ(1) = 1⊗1``."""
    action = np.asarray(A.counit, dtype=object).reshape(A.dim, 1, 1)
    coaction = np.asarray(A.unit, dtype=object).reshape(1, A.dim, 1)
    return YDModule(A, action, coaction, flavor, name="k")


def yd_sum(M: YDModule, N: YDModule, name: str = "") -> YDModule:
    """Direct sum ``M⊕N`` of YD modules of the same flavor."""
    d, m, n = M.algebra.dim, M.dim, N.dim
    action = zeros((d, m + n, m + n))
    action[:, :m, :m] = M.action
    action[:, m:, m:] = N.action
    coaction = zeros((m + n, d, m + n))
    coaction[:m, :, :m] = M.coaction
    coaction[m:, :, m:] = N.coaction
    return YDModule(M.algebra, action, coaction, M.flavor, name=name)


def yd_line_modules(A: QuasiHopfAlgebra) -> tuple[YDModule, ...]:
    """
    ``M₊`` (trivial), ``M₋`` (sign action, coaction through ``g``) and ``M₊⊕M₋`` in all three flavors.

    On ``M₋⊗M₋`` the braiding is ``-τ``; on ``M₊`` it is the flip.
    """
    modules = []
    for flavor in FLAVORS:
        plus = yd_line(A, 1, 0, flavor, name=f"M+/{flavor}")
        minus = yd_line(A, -1, 1, flavor, name=f"M-/{flavor}")
        modules.extend([plus, minus, yd_sum(plus, minus, name=f"M+M-/{flavor}")])
    return tuple(modules)


def kz2_over_field(base: QuasiHopfAlgebra | None = None) -> BraidedHopfAlgebra:
    """``kZ₂`` as a Hopf algebra in ``YD(k)``, i.e. in plain vector spaces."""
    base = base or trivial_field_algebra()
    c = _group_z2_constants()
    action = identity_matrix(2).reshape(1, 2, 2)
    coaction = identity_matrix(2).reshape(2, 1, 2)
    return braided_from_structure(
        base, action, coaction, c["mult"], c["unit"], c["comult"], c["counit"], c["antipode"], name="kZ2/k"
    )


def validate_instance(instance: Instance) -> VerificationReport:
    """Every checker applicable to the parts of ``instance``, merged into one report."""
    reports = [check_quasi_bialgebra(instance.algebra), check_quasi_hopf(instance.algebra)]
    if instance.qt is not None:
        reports.append(check_qt(instance.qt))
    reports.extend(check_yd(M) for M in instance.modules)
    reports.extend(check_braided_hopf(B) for B in instance.braided)
    return VerificationReport.merged(instance.name, reports)


def _trivial() -> Instance:
    k = trivial_field_algebra()
    return Instance("trivial", k, braided=(kz2_over_field(k),))


def _kz2() -> Instance:
    A = group_algebra_z2()
    return Instance("kz2", A, r_trivial(A), yd_line_modules(A))


def _kz2_rg() -> Instance:
    A = group_algebra_z2()
    return Instance("kz2_rg", A, r_z2(A), yd_line_modules(A))


def _h2() -> Instance:
    return Instance("h2", h2_quasi())


def _h4() -> Instance:
    A = sweedler_h4()
    return Instance("h4", A, r_h4(A, 0))


def _h4_l1() -> Instance:
    A = sweedler_h4()
    return Instance("h4_l1", A, r_h4(A, 1))


CATALOG: dict[str, Callable[[], Instance]] = {
    "trivial": _trivial,
    "kz2": _kz2,
    "kz2_rg": _kz2_rg,
    "h2": _h2,
    "h4": _h4,
    "h4_l1": _h4_l1,
}


def build_instance(name: str, validate: bool = True) -> Instance:
    """
    Build the catalog entry ``name``.

    Raises:
        KeyError: If ``name`` is not in the catalog
        PostCheckError: If ``validate`` is set and the entry fails any applicable check
    """
    if name not in CATALOG:
        raise KeyError(f"unknown instance '{name}', expected one of {sorted(CATALOG)}")
    instance = CATALOG[name]()
    if validate:
        report = validate_instance(instance)
        if not report.passed:
            raise PostCheckError(f"shipped instance '{name}' fails its checks", report)
        logger.info(f"Instance {name} validated: {report.summary()}")
    return instance


def catalog(validate: bool = True) -> dict[str, Instance]:
    return {name: build_instance(name, validate) for name in CATALOG}
