from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasi_hopf import derived
from quasi_hopf.axioms import is_quasi_hopf
from quasi_hopf.derived import (
    check_lemma_identities,
    clear_cache,
    cop,
    derive_pq,
    derive_twist,
    derive_U,
    derived_elements,
    op,
    opcop,
    same_structure,
    twist_algebra,
    variants,
)
from quasi_hopf.exceptions import NotInvertibleError, PreconditionError
from quasi_hopf.instances import group_algebra_z2
from quasi_hopf.tensor import element, kron, map_equal

P_MINUS = [Fraction(1, 2), Fraction(-1, 2)]


def _gauge(A, c):
    """``1⊗1 + c·p₋⊗p₋`` on kZ₂-like algebras; satisfies the counit condition for every ``c``."""
    return A.one("1", "2") + kron(element(P_MINUS, "1"), element(P_MINUS, "2")).scale(c)


def _r_like(A):
    half = Fraction(1, 2)
    return element(np.array([[half, half], [half, -half]], dtype=object), "1", "2")


class TestOrdinaryHopfCollapse:
    """With Φ = 1⊗1⊗1 and α = β = 1 every canonical element is 1⊗1."""

    @pytest.mark.parametrize("name", ["kz2", "h4"])
    def test_all_elements_are_one(self, name, request):
        A = request.getfixturevalue(name)
        one = A.one("1", "2")
        for key, value in derived_elements(A).items():
            assert map_equal(value, one), key

    def test_reports_pass(self, h4):
        assert derive_twist(h4).report.passed
        assert derive_pq(h4).report.passed


class TestNontrivialReassociator:
    """H(2): the canonical elements are certified by their own post-checks."""

    def test_twist(self, h2):
        tw = derive_twist(h2)
        assert tw.report.ids() == [
            "twist-inverse-right",
            "twist-inverse-left",
            "twist-antipode",
            "twist-gamma",
            "twist-delta",
            "twist-reassociator",
        ]
        assert tw.report.passed
        assert not map_equal(tw.f, h2.one("1", "2"))

    def test_pq(self, h2):
        pq = derive_pq(h2)
        assert pq.report.passed
        assert {"pR-intertwiner", "qR-intertwiner", "pL-intertwiner", "qL-intertwiner", "qR-coproduct"} <= set(
            pq.report.ids()
        )

    def test_lemma_identities(self, h2):
        report = check_lemma_identities(h2)
        assert report.passed
        assert len(report.entries) == 6

    def test_lemma_identities_with_rescaled_alpha_beta(self, kz2):
        # ε(α) = 2, ε(β) = 1/2 is a valid quasi-Hopf structure on kZ₂
        alpha = np.array([2, 0], dtype=object)
        scaled = replace(kz2, alpha=alpha, beta=np.array([Fraction(1, 2), 0], dtype=object))
        report = check_lemma_identities(scaled)
        assert report.passed
        assert report.entry("twist-inv-alpha").passed
        assert report.entry("twist-beta").passed

    def test_u_is_invertible(self, h2):
        U = derive_U(h2)
        h2.inverse_element(U, ("1", "2"))


class TestCache:
    """Derived elements are computed once per structure."""

    def test_same_content_shares_result(self):
        clear_cache()
        first = derive_twist(group_algebra_z2())
        assert derive_twist(group_algebra_z2()) is first

    def test_clear(self, kz2):
        first = derive_twist(kz2)
        clear_cache()
        assert derive_twist(kz2) is not first

    def test_compute_called_once(self, kz2, mocker):
        clear_cache()
        spy = mocker.spy(derived, "_pq")
        derive_pq(kz2)
        derive_pq(kz2)
        assert spy.call_count == 1

    def test_least_recently_used_is_evicted(self, kz2, h2, monkeypatch, mocker):
        clear_cache()
        monkeypatch.setattr(derived, "CACHE_SIZE", 2)
        spy = mocker.spy(derived, "_pq")
        derive_pq(kz2)
        derive_pq(h2)
        assert len(derived._CACHE) == 2
        derive_pq(h2)
        assert spy.call_count == 2
        derive_pq(kz2)
        assert spy.call_count == 3
        assert len(derived._CACHE) == 2


class TestTwisting:
    """Gauge transformations."""

    def test_trivial_twist_is_identity(self, h2):
        assert same_structure(twist_algebra(h2, h2.one("1", "2")), h2)

    def test_r_like_twist_of_kz2(self, kz2):
        twisted = twist_algebra(kz2, _r_like(kz2))
        assert is_quasi_hopf(twisted)
        assert twisted.name == "kZ2^F"

    def test_round_trip(self, kz2):
        F = _r_like(kz2)
        F_inv = kz2.inverse_element(F, ("1", "2"))
        back = twist_algebra(twist_algebra(kz2, F), F_inv)
        assert same_structure(back, kz2)

    def test_counit_condition(self, kz2):
        with pytest.raises(PreconditionError, match="counit"):
            twist_algebra(kz2, kz2.one("1", "2").scale(2))

    def test_singular_twist(self, kz2):
        with pytest.raises(NotInvertibleError, match="not invertible"):
            twist_algebra(kz2, _gauge(kz2, -1))

    @settings(max_examples=15, deadline=None)
    @given(st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(lambda c: c != -1))
    def test_gauge_invariance(self, c):
        A = group_algebra_z2()
        twisted = twist_algebra(A, _gauge(A, c))
        assert is_quasi_hopf(twisted)
        assert derive_twist(twisted).report.passed


class TestVariants:
    """op, cop and opcop."""

    def test_all_variants_are_quasi_hopf(self, h2):
        for variant in variants(h2, validate=True):
            assert is_quasi_hopf(variant)

    def test_cop_of_h2(self, h2):
        assert is_quasi_hopf(cop(h2))
        assert cop(h2).name == "H(2)^cop"

    def test_op_of_kz2_is_kz2(self, kz2):
        assert same_structure(op(kz2), kz2)

    @pytest.mark.parametrize("name", ["h2", "h4"])
    def test_involutions(self, name, request):
        A = request.getfixturevalue(name)
        assert same_structure(op(op(A)), A)
        assert same_structure(opcop(opcop(A)), A)

    def test_op_of_h4_differs(self, h4):
        assert not same_structure(op(h4), h4)
        assert is_quasi_hopf(op(h4))
