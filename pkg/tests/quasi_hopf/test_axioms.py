import itertools
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from quasi_hopf.algebra import QuasiHopfAlgebra
from quasi_hopf.axioms import check_quasi_bialgebra, check_quasi_hopf, is_quasi_hopf
from quasi_hopf.exceptions import ShapeError
from quasi_hopf.instances import group_algebra_z2, h2_quasi, sweedler_h4, trivial_field_algebra


@pytest.mark.parametrize("build", [trivial_field_algebra, group_algebra_z2, h2_quasi, sweedler_h4])
def test_shipped_algebras_pass(build):
    A = build()
    assert check_quasi_bialgebra(A).passed
    assert check_quasi_hopf(A).passed
    assert is_quasi_hopf(A)


def test_report_ids(kz2):
    assert check_quasi_bialgebra(kz2).ids() == [
        "associativity",
        "unit-left",
        "unit-right",
        "comult-multiplicative",
        "comult-unit",
        "counit-multiplicative",
        "counit-unit",
        "quasi-coassociativity",
        "comult-counit-left",
        "comult-counit-right",
        "pentagon",
        "phi-counit-middle",
        "phi-counit-first",
        "phi-counit-last",
        "phi-invertible-right",
        "phi-invertible-left",
    ]
    assert "normalization-phi" in check_quasi_hopf(kz2).ids()


def test_halved_reassociator_breaks_pentagon(h2):
    # 1⊗1⊗1 - p₋⊗p₋⊗p₋ is not a 3-cocycle
    p_minus = np.array([Fraction(1, 2), Fraction(-1, 2)], dtype=object)
    cube = np.multiply.outer(np.multiply.outer(p_minus, p_minus), p_minus)
    phi = group_algebra_z2().phi - cube
    broken = replace(h2, phi=phi)
    report = check_quasi_bialgebra(broken)
    entry = report.entry("pentagon")
    assert not entry.passed
    assert entry.witness is not None
    assert entry.witness.lhs != entry.witness.rhs


@pytest.mark.parametrize("index", list(itertools.product(range(2), repeat=3)))
def test_every_reassociator_entry_is_checked(h2, index):
    # a unit bump doubles Φ on p₊⊗p₊⊗p₊, so the pentagon fails there
    phi = h2.phi.copy()
    phi[index] += 1
    report = check_quasi_bialgebra(replace(h2, phi=phi))
    for check_id in ("pentagon", "phi-counit-first"):
        entry = report.entry(check_id)
        assert not entry.passed
        assert entry.witness is not None
        assert entry.witness.lhs != entry.witness.rhs


def test_perturbed_reassociator_is_not_inverted(h2):
    phi = h2.phi.copy()
    phi[1, 1, 1] += 1
    report = check_quasi_bialgebra(replace(h2, phi=phi))
    assert not report.entry("phi-invertible-right").passed


def test_group_like_alpha_breaks_normalization(kz2):
    # kZ₂ is commutative, so ΣS(h₁)αh₂ = ε(h)α still holds for α = g
    report = check_quasi_hopf(replace(kz2, alpha=np.array([0, 1], dtype=object)))
    assert report.entry("antipode-alpha").passed
    assert not report.entry("normalization-phi").passed
    assert report.entry("normalization-phi").witness.index == (0,)


def test_unbalanced_alpha_beta(kz2):
    report = check_quasi_hopf(replace(kz2, alpha=np.array([2, 0], dtype=object)))
    failed = {entry.check_id for entry in report.failures()}
    assert failed == {"normalization-phi", "normalization-phi-inv", "alpha-beta-counit"}


def test_rescaling_alpha_beta(kz2):
    scaled = replace(kz2, alpha=np.array([2, 0], dtype=object), beta=np.array([Fraction(1, 2), 0], dtype=object))
    assert is_quasi_hopf(scaled)
    normalized = scaled.with_alpha_beta_normalized()
    assert normalized.alpha.tolist() == [1, 0]
    assert normalized.beta.tolist() == [1, 0]
    assert kz2.with_alpha_beta_normalized() is kz2


def test_wrong_antipode(kz2):
    swap = np.array([[0, 1], [1, 0]], dtype=object)
    report = check_quasi_hopf(replace(kz2, antipode=swap))
    assert not report.entry("antipode-unit").passed


def test_shape_errors():
    A = group_algebra_z2()
    with pytest.raises(ShapeError, match="phi has shape"):
        QuasiHopfAlgebra(A.mult, A.unit, A.comult, A.counit, A.phi[:1], A.phi_inv, A.antipode, A.alpha, A.beta)
