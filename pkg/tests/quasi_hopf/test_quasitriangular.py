from fractions import Fraction

import numpy as np
import pytest

from quasi_hopf.category import ModuleCategory, regular_module, trivial_module
from quasi_hopf.exceptions import ShapeError
from quasi_hopf.instances import yd_line
from quasi_hopf.quasitriangular import (
    QTStructure,
    check_ext,
    check_qt,
    check_qybe,
    derive_u,
    induced_yd,
    is_quasitriangular,
)
from quasi_hopf.tensor import map_equal
from quasi_hopf.yetter_drinfeld import check_yd, same_module, yd_tensor

QT_FIXTURES = ["kz2_trivial_r", "kz2_rg", "h4_r0", "h4_r1"]


@pytest.fixture(params=QT_FIXTURES)
def qt(request):
    return request.getfixturevalue(request.param)


class TestCheckQt:
    """R-matrix axioms."""

    def test_shipped_structures(self, qt):
        report = check_qt(qt)
        assert report.passed, report.to_text()
        assert report.ids() == [
            "qt-comult-left",
            "qt-comult-right",
            "qt-intertwiner",
            "qt-counit-left",
            "qt-counit-right",
            "r-invertible",
        ]

    def test_counit_violation(self, kz2):
        R = np.zeros((2, 2), dtype=object)
        R[0, 1] = 1
        report = check_qt(QTStructure(kz2, R, name="1⊗g"))
        entry = report.entry("qt-counit-left")
        assert not entry.passed
        assert entry.witness.index == (0,)

    def test_trivial_r_on_noncocommutative_algebra(self, h4):
        R = np.outer(h4.unit, h4.unit)
        report = check_qt(QTStructure(h4, R))
        assert not report.entry("qt-intertwiner").passed
        assert not is_quasitriangular(QTStructure(h4, R))

    def test_singular_r(self, kz2):
        report = check_qt(QTStructure(kz2, np.zeros((2, 2), dtype=object)))
        assert not report.entry("r-invertible").passed

    def test_shape(self, kz2):
        with pytest.raises(ShapeError):
            QTStructure(kz2, np.zeros((2, 3), dtype=object))

    def test_r_lambda_entries(self, h4_r1):
        # x⊗x has coefficient λ/2
        assert h4_r1.R[2, 2] == Fraction(1, 2)
        assert h4_r1.name == "R_1"


class TestDrinfeldElement:
    """The element u and the antipode square."""

    def test_reports_pass(self, qt):
        result = derive_u(qt)
        assert result.report.passed
        assert result.report.ids() == ["u-inverse-right", "u-inverse-left", "u-counit", "antipode-square"]

    def test_trivial_r_gives_one(self, kz2, kz2_trivial_r):
        assert map_equal(derive_u(kz2_trivial_r).u, kz2.one("1"))

    @pytest.mark.parametrize("fixture", ["kz2_rg", "h4_r0", "h4_r1"])
    def test_u_is_the_group_like(self, fixture, request):
        qt = request.getfixturevalue(fixture)
        g = np.zeros(qt.algebra.dim, dtype=object)
        g[1] = 1
        u = derive_u(qt)
        assert map_equal(u.u, qt.algebra.el(g, "1"))
        assert map_equal(u.u_inv, qt.algebra.el(g, "1"))

    def test_structures_are_cached_separately(self, h4_r0, h4_r1):
        assert derive_u(h4_r0) is not derive_u(h4_r1)
        assert derive_u(h4_r0) is derive_u(h4_r0)


class TestIdentities:
    """The twist identity for R and the quasi-Yang-Baxter equation."""

    def test_twist_identity(self, qt):
        assert check_ext(qt).passed

    def test_yang_baxter(self, qt):
        assert check_qybe(qt).passed

    def test_yang_baxter_on_h2_candidate(self, h2):
        # H(2) ships without an R-matrix; R = 1⊗1 still solves the Yang-Baxter equation
        R = np.outer(h2.unit, h2.unit)
        assert check_qybe(QTStructure(h2, R)).passed


class TestInducedYd:
    """The YD structure λ(m) = ΣR²⊗R¹·m."""

    def test_trivial_module(self, h4_r1):
        Y = induced_yd(h4_r1, trivial_module(h4_r1.algebra))
        assert Y.coaction.reshape(-1).tolist() == h4_r1.algebra.unit.tolist()

    def test_sign_module_is_graded_by_g(self, kz2, kz2_rg):
        sign = yd_line(kz2, -1, 1).module
        assert same_module(induced_yd(kz2_rg, sign), yd_line(kz2, -1, 1))

    @pytest.mark.parametrize("fixture", ["kz2_rg", "h4_r0", "h4_r1"])
    def test_regular_module(self, fixture, request):
        qt = request.getfixturevalue(fixture)
        assert check_yd(induced_yd(qt, regular_module(qt.algebra))).passed

    @pytest.mark.parametrize("fixture", ["kz2_rg", "h4_r1"])
    def test_tensor_coaction_agrees(self, fixture, request):
        qt = request.getfixturevalue(fixture)
        A = qt.algebra
        V = regular_module(A)
        product = ModuleCategory(A).tensor(V, V)
        induced = induced_yd(qt, product, validate=False)
        tensored = yd_tensor(induced_yd(qt, V), induced_yd(qt, V))
        assert map_equal(induced.coaction, tensored.coaction)
