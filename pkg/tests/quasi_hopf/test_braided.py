import numpy as np
import pytest

from quasi_hopf.braided import (
    BraidedAlgebra,
    BraidedHopfAlgebra,
    check_braided_algebra,
    check_braided_bialgebra,
    check_braided_hopf,
    closed_hopf_action,
    dual_braided_hopf,
    hopf_action_map,
    identity_antipode,
    is_braided_hopf,
)
from quasi_hopf.exceptions import PreconditionError, ShapeError
from quasi_hopf.h_zero import build_h0_hopf
from quasi_hopf.instances import kz2_over_field, unit_yd, yd_line
from quasi_hopf.tensor import LinearMap, kron, map_equal, zeros


@pytest.fixture
def kz2_k():
    return kz2_over_field()


def test_group_algebra_over_the_field(kz2_k):
    report = check_braided_hopf(kz2_k)
    assert report.passed, report.to_text()
    assert kz2_k.name == "kZ2/k"
    assert kz2_k.H.name == "k"


def test_bialgebra_routes(kz2_k):
    report = check_braided_bialgebra(kz2_k)
    for check_id in ("comult-multiplicative", "comult-multiplicative-categorical", "comult-routes-agree"):
        assert report.entry(check_id).passed


def test_identity_antipode_of_group_of_order_two(kz2_k):
    # every group element of Z₂ is its own inverse
    flipped = identity_antipode(kz2_k)
    assert flipped.name == "kZ2/k[S=id]"
    assert is_braided_hopf(flipped)


def test_zero_antipode(kz2_k):
    broken = BraidedHopfAlgebra(kz2_k.algebra, kz2_k.coalgebra, zeros((2, 2)), name="S=0")
    report = check_braided_hopf(broken)
    assert not report.entry("antipode-left").passed
    assert not report.entry("antipode-right").passed
    assert report.entry("antipode-linear").passed


def test_wrong_unit(kz2_k):
    A = BraidedAlgebra(kz2_k.carrier, kz2_k.algebra.mult, np.array([0, 1], dtype=object))
    report = check_braided_algebra(A)
    assert not report.entry("unit-left").passed
    assert report.entry("quasi-associative").passed


def test_shapes_and_flavor(kz2, kz2_k):
    with pytest.raises(ShapeError, match="mult"):
        BraidedAlgebra(kz2_k.carrier, zeros((2, 2, 1)), kz2_k.algebra.unit)
    with pytest.raises(PreconditionError, match="left YD"):
        BraidedAlgebra(unit_yd(kz2, "left-right"), zeros((1, 1, 1)), np.array([1], dtype=object))


def test_carriers_must_agree(kz2):
    line = yd_line(kz2, -1, 1)
    unit = np.array([1], dtype=object)
    algebra = BraidedAlgebra(line, np.array([[[1]]], dtype=object), unit)
    other = kz2_over_field().coalgebra
    with pytest.raises(PreconditionError, match="one carrier"):
        BraidedHopfAlgebra(algebra, other)


def test_dual_over_the_field(kz2_k):
    D = dual_braided_hopf(kz2_k)
    assert D.name == "kZ2/k*"
    assert D.dim == 2
    assert is_braided_hopf(D)


def test_dual_requires_antipode(kz2_k):
    bialgebra = BraidedHopfAlgebra(kz2_k.algebra, kz2_k.coalgebra)
    with pytest.raises(PreconditionError, match="Hopf"):
        dual_braided_hopf(bialgebra)
    with pytest.raises(PreconditionError, match="no antipode"):
        _ = bialgebra.antipode_map


def test_closed_hopf_action_with_plain_right_action(kz2_rg):
    B = build_h0_hopf(kz2_rg, validate=False)
    M = B.carrier

    def omega(t, m, b):
        return B.mul(t, m, b)

    t = B.delta(kron(M.vector("i", "a"), M.vector("j", "b")), "a", "1", "2")
    closed = LinearMap.from_tensor(closed_hopf_action(B, t, M, omega, "1", "2", "b"), ("i", "j"), ("1", "2"))
    categorical = hopf_action_map(B, M.module, B.mult_map) @ B.comult_map.tensor(LinearMap.identity((B.dim,)))
    assert map_equal(closed, categorical)
