from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from quasi_hopf import suites
from quasi_hopf.exceptions import NotInvertibleError, PreconditionError
from quasi_hopf.instances import build_instance
from quasi_hopf.suites import (
    SUITES,
    basis_names,
    derive,
    format_element,
    normalize_alpha_beta,
    plan_suite,
    run_suite,
)


@pytest.fixture
def h2_instance():
    return build_instance("h2", validate=False)


@pytest.fixture
def trivial_instance():
    return build_instance("trivial", validate=False)


class TestRunSuite:
    """Fan-out and reassembly of checker tasks."""

    def test_all_passes_on_kz2_rg(self, kz2_rg_instance):
        result = run_suite(kz2_rg_instance, "all", max_workers=4)
        assert result.passed, result.report.to_text()
        groups = {entry.group for entry in result.report.entries}
        assert {"qbi", "qhopf", "qt", "yd", "quantum-commutative", "hopf-module", "integrals"} <= groups
        assert "integrals[H0(kZ2, R_g)]" in result.derived

    @pytest.mark.parametrize("suite", SUITES)
    def test_each_suite_on_kz2_rg(self, suite, kz2_rg_instance):
        assert run_suite(kz2_rg_instance, suite).passed

    def test_order_does_not_depend_on_workers(self, kz2_instance):
        serial = run_suite(kz2_instance, "yd", max_workers=1)
        parallel = run_suite(kz2_instance, "yd", max_workers=8)
        assert serial.report.ids() == parallel.report.ids()
        assert serial.to_dict() == parallel.to_dict()

    def test_all_skips_missing_blocks(self, h2_instance):
        labels = [label for label, _ in plan_suite(h2_instance, "all")]
        assert labels == ["qbi", "qhopf", "twist", "pq", "lemma", "h0"]
        assert run_suite(h2_instance).passed

    def test_named_suite_needs_its_block(self, h2_instance):
        with pytest.raises(PreconditionError, match="r_matrix"):
            run_suite(h2_instance, "qt")
        with pytest.raises(PreconditionError, match="modules"):
            run_suite(h2_instance, "yd")

    def test_unknown_suite(self, kz2_instance):
        with pytest.raises(ValueError, match="unknown suite 'pentagon'"):
            run_suite(kz2_instance, "pentagon")

    def test_failing_task_is_recorded(self, kz2_instance, monkeypatch):
        def broken(A):
            raise NotInvertibleError("singular")

        monkeypatch.setattr(suites, "check_quasi_bialgebra", broken)
        result = run_suite(kz2_instance, "qbi")
        assert not result.passed
        entry = result.report.entry("computation")
        assert entry.note == "NotInvertibleError: singular"

    def test_braided_over_the_field(self, trivial_instance):
        result = run_suite(trivial_instance, "braided")
        assert result.passed
        assert result.to_text().startswith("suite braided")


class TestDerive:
    """Formatted derived elements."""

    def test_ordinary_hopf_twist_is_trivial(self, kz2_instance):
        assert derive(kz2_instance, "f") == {"f": "1⊗1", "f_inv": "1⊗1"}

    def test_h2_twist(self, h2_instance):
        assert derive(h2_instance, "f")["f"] == "1/2 1⊗1 + 1/2 1⊗e1 + 1/2 e1⊗1 - 1/2 e1⊗e1"

    def test_u_is_g(self, kz2_rg_instance):
        assert derive(kz2_rg_instance, "u") == {"u": "e1", "u_inv": "e1"}

    def test_u_needs_r_matrix(self, h2_instance):
        with pytest.raises(PreconditionError):
            derive(h2_instance, "u")

    def test_h0_tables(self, kz2_rg_instance):
        out = derive(kz2_rg_instance, "h0")
        assert out["unit"] == "1"
        assert out["product[3]"] == "e1∘e1 = 1"
        assert out["antipode(e1)"] == "e1"

    def test_integrals(self, trivial_instance):
        assert derive(trivial_instance, "integrals") == {"integrals[kZ2/k]": "e0*"}

    def test_pq_keys(self, h2_instance):
        assert set(derive(h2_instance, "pq")) == {"p_R", "q_R", "p_L", "q_L"}

    def test_unknown(self, kz2_instance):
        with pytest.raises(ValueError, match="unknown derivation"):
            derive(kz2_instance, "omega")


class TestFormatting:
    """Basis names and exact linear combinations."""

    def test_basis_names(self, kz2, h4):
        assert basis_names(kz2) == ["1", "e1"]
        assert basis_names(h4) == ["1", "e1", "e2", "e3"]

    @pytest.mark.parametrize(
        ("values", "expected"),
        [
            ([Fraction(1, 2), Fraction(-1, 2)], "1/2 1 - 1/2 e1"),
            ([0, 0], "0"),
            ([-1, 1], "-1 + e1"),
            ([0, 3], "3 e1"),
        ],
    )
    def test_format_element(self, values, expected):
        assert format_element(np.array(values, dtype=object), ["1", "e1"]) == expected


def test_normalize_alpha_beta(kz2_rg_instance):
    A = kz2_rg_instance.algebra
    scaled = replace(A, alpha=np.array([2, 0], dtype=object), beta=np.array([Fraction(1, 2), 0], dtype=object))
    normalized = normalize_alpha_beta(replace(kz2_rg_instance, algebra=scaled))
    assert normalized.algebra.alpha.tolist() == [1, 0]
    assert normalized.qt.algebra is normalized.algebra
    assert all(M.algebra is normalized.algebra for M in normalized.modules)
    assert normalize_alpha_beta(kz2_rg_instance) is kz2_rg_instance
