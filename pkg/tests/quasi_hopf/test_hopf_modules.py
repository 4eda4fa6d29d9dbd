import numpy as np
import pytest

from quasi_hopf.exceptions import PreconditionError, ShapeError
from quasi_hopf.h_zero import build_h0_hopf
from quasi_hopf.hopf_modules import (
    HopfModule,
    b_star_hopf_module,
    check_b_star,
    check_hopf_module,
    coinvariant_module,
    coinvariants,
    hm_projection,
    integrals,
    regular_hopf_module,
    structure_iso,
    trivial_hopf_module,
)
from quasi_hopf.instances import kz2_over_field, unit_yd, yd_sum
from quasi_hopf.tensor import LinearMap, map_equal, zeros


@pytest.fixture
def kz2_k():
    return kz2_over_field()


@pytest.fixture
def h0_kz2(kz2_rg):
    return build_h0_hopf(kz2_rg)


class TestHopfModules:
    """Right Hopf modules in the YD category."""

    @pytest.mark.parametrize("fixture", ["kz2_k", "h0_kz2"])
    def test_regular(self, fixture, request):
        B = request.getfixturevalue(fixture)
        report = check_hopf_module(regular_hopf_module(B, validate=False))
        assert report.passed, report.to_text()
        assert {"hopf-compatible", "hopf-compatible-categorical", "hopf-routes-agree"} <= set(report.ids())

    def test_coaction_through_unit_is_not_compatible(self, kz2_k):
        coaction = zeros((2, 2, 2))
        for m in range(2):
            coaction[m, m, :] = kz2_k.algebra.unit
        M = HopfModule(kz2_k.carrier, kz2_k, kz2_k.algebra.mult, coaction)
        report = check_hopf_module(M)
        assert report.entry("coaction-counit").passed
        assert not report.entry("hopf-compatible").passed

    def test_trivial_hopf_module(self, kz2_k):
        k = unit_yd(kz2_k.H)
        N = yd_sum(k, k, name="k+k")
        M = trivial_hopf_module(N, kz2_k)
        assert M.dim == 4
        assert coinvariants(M).dim == N.dim

    def test_shape(self, kz2_k):
        with pytest.raises(ShapeError, match="right coaction"):
            HopfModule(kz2_k.carrier, kz2_k, kz2_k.algebra.mult, zeros((2, 2, 1)))

    def test_carrier_must_live_over_the_base(self, kz2, kz2_k):
        with pytest.raises(PreconditionError):
            HopfModule(unit_yd(kz2), kz2_k, zeros((1, 2, 1)), zeros((1, 1, 2)))


class TestStructureTheorem:
    """Coinvariants, the projection and M ≅ M^coB⊗B."""

    def test_coinvariants_of_b_are_the_unit_line(self, kz2_k):
        space = coinvariants(regular_hopf_module(kz2_k))
        assert space.dim == 1
        assert space.basis[0].tolist() == kz2_k.algebra.unit.tolist()
        assert space.report.passed

    @pytest.mark.parametrize("fixture", ["kz2_k", "h0_kz2"])
    def test_projection_is_idempotent(self, fixture, request):
        M = regular_hopf_module(request.getfixturevalue(fixture))
        P, report = hm_projection(M)
        assert report.passed, report.to_text()
        assert map_equal(P @ P, P)

    @pytest.mark.parametrize("fixture", ["kz2_k", "h0_kz2"])
    def test_structure_iso(self, fixture, request):
        M = regular_hopf_module(request.getfixturevalue(fixture))
        iso = structure_iso(M)
        assert iso.report.passed, iso.report.to_text()
        assert iso.coinvariants.dim == 1
        assert map_equal(iso.F @ iso.G, LinearMap.identity((M.dim,)))

    def test_structure_of_trivial_module(self, kz2_k):
        k = unit_yd(kz2_k.H)
        M = trivial_hopf_module(yd_sum(k, k), kz2_k)
        iso = structure_iso(M)
        assert iso.coinvariants.dim == 2
        assert iso.report.entry("structure-dimension").passed

    def test_no_coinvariants(self, kz2_k):
        with pytest.raises(PreconditionError, match="no nonzero coinvariants"):
            coinvariant_module(regular_hopf_module(kz2_k), [])


class TestIntegrals:
    """B* as a Hopf module and its integrals."""

    @pytest.mark.parametrize("fixture", ["kz2_k", "h0_kz2"])
    def test_b_star(self, fixture, request):
        report = check_b_star(request.getfixturevalue(fixture))
        assert report.passed, report.to_text()
        assert "bstar-action-categorical" in report.ids()

    def test_b_star_name(self, kz2_k):
        assert b_star_hopf_module(kz2_k).name == "kZ2/k*"

    @pytest.mark.parametrize("fixture", ["kz2_k", "h0_kz2"])
    def test_integrals_form_a_line(self, fixture, request):
        space = integrals(request.getfixturevalue(fixture))
        assert space.dim == 1
        assert space.report.entry("integral-routes-agree").passed

    def test_integral_of_group_algebra(self, kz2_k):
        # Λ(1) ≠ 0 and Λ(g) = 0 up to scale
        (Lam,) = integrals(kz2_k).basis
        assert Lam[1] == 0
        assert Lam[0] != 0
        assert np.count_nonzero(Lam) == 1
