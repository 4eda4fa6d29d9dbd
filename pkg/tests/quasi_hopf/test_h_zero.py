import numpy as np
import pytest

from quasi_hopf.braided import BraidedAlgebra, check_braided_algebra, is_braided_hopf
from quasi_hopf.h_zero import (
    build_h0,
    build_h0_hopf,
    check_h0,
    check_quantum_commutative,
    h0_consistency,
    h0_dual_and_integrals,
    h0_module,
    h_zero,
)
from quasi_hopf.tensor import map_equal


class TestBraidedAlgebra:
    """H₀ as an algebra in the YD category, for every quasi-Hopf algebra."""

    @pytest.mark.parametrize("name", ["k", "kz2", "h2", "h4"])
    def test_h0_is_an_algebra(self, name, request):
        A = request.getfixturevalue(name)
        report = check_braided_algebra(build_h0(A, validate=False))
        assert report.passed, report.to_text()

    def test_names(self, h2):
        assert h0_module(h2).name == "H0(H(2))"
        assert build_h0(h2).name == "H0(H(2))"

    def test_ordinary_hopf_keeps_the_product(self, h4):
        # with Φ = 1 and α = β = 1 the deformed product is the product of H
        B = build_h0(h4)
        assert map_equal(B.mult, h4.mult)
        assert B.unit.tolist() == h4.beta.tolist()

    def test_deformed_product_of_h2(self, h2):
        B = build_h0(h2)
        assert B.unit.tolist() == h2.beta.tolist()
        assert check_quantum_commutative(B).passed

    @pytest.mark.parametrize("name", ["kz2", "h2", "h4"])
    def test_check_h0(self, name, request):
        A = request.getfixturevalue(name)
        report = check_h0(A)
        assert report.passed, report.to_text()
        assert {"quantum-commutative", "quantum-commutative-braiding", "quantum-commutative-routes-agree"} <= set(
            report.ids()
        )

    def test_opposite_product_is_not_quantum_commutative(self, h4):
        B = build_h0(h4)
        opposite = BraidedAlgebra(B.carrier, np.transpose(h4.mult, (1, 0, 2)), h4.beta)
        report = check_quantum_commutative(opposite)
        assert not report.entry("quantum-commutative").passed
        assert not report.entry("quantum-commutative-braiding").passed
        assert report.entry("quantum-commutative-routes-agree").passed


class TestQuasitriangularCase:
    """H₀ as a braided Hopf algebra once an R-matrix is fixed."""

    @pytest.mark.parametrize("fixture", ["kz2_rg", "kz2_trivial_r", "h4_r0", "h4_r1"])
    def test_braided_hopf(self, fixture, request):
        QT = request.getfixturevalue(fixture)
        assert is_braided_hopf(build_h0_hopf(QT, validate=False))

    def test_name(self, kz2_rg):
        assert build_h0_hopf(kz2_rg).name == "H0(kZ2, R_g)"

    def test_h_zero_bundle(self, kz2, h2, kz2_rg):
        assert h_zero(h2).hopf is None
        bundle = h_zero(kz2, kz2_rg)
        assert bundle.hopf is not None
        assert bundle.braided.dim == 2

    def test_consistency_is_a_finding(self, kz2_rg):
        # the quasi-Hopf coaction is Δ on kZ₂ while ΣR²⊗R¹▷h is 1⊗h
        report = h0_consistency(kz2_rg)
        entry = report.entry("coaction-quasi-vs-induced")
        assert entry.finding
        assert not entry.passed
        assert report.passed

    @pytest.mark.parametrize("fixture", ["kz2_rg", "h4_r1"])
    def test_closed_form_dual(self, fixture, request):
        QT = request.getfixturevalue(fixture)
        result = h0_dual_and_integrals(QT)
        assert result.report.passed, result.report.to_text()
        assert len(result.integrals) == 1
        for check_id in ("dual-mult", "dual-mult-expanded", "dual-comult", "dual-counit", "dual-antipode"):
            assert result.report.entry(check_id).passed
        assert is_braided_hopf(result.dual)
